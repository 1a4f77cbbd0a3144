//! Runtime limits shared by the library entry points and the CLI.

/// Environment variable overriding [`Config::max_degree`].
pub const MAX_DEGREE_ENV: &str = "MOLDKIT_MAX_DEGREE";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    /// Largest matrix degree accepted from documents.
    pub max_degree: usize,
    /// Longest word tried when searching for a unit-pivot word set.
    pub max_word_len: usize,
    /// Largest number of candidate subspaces a mold census may visit.
    pub census_limit: u128,
}

impl Default for Config {
    fn default() -> Self {
        Config { max_degree: 8, max_word_len: 4, census_limit: 10_000_000 }
    }
}

impl Config {
    /// Defaults, with the degree cap taken from `MOLDKIT_MAX_DEGREE` when set.
    pub fn from_env() -> Self {
        let mut config = Config::default();
        if let Some(n) =
            std::env::var(MAX_DEGREE_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()).filter(|&n| n >= 1)
        {
            config.max_degree = n;
        }
        config
    }
}
