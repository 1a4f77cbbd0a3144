//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use moldkit::borel::{self, discriminant2, discriminant4, span_of_pair};
use moldkit::canonical::{
    canonical_form, canonical_form_with_words, conjugator_search, epsilon_eta, equivalent, find_star_words,
    well_shaped_basis, Equivalence, IndexPair, StarResult,
};
use moldkit::moduli::{enumerate_molds, flag_point_count, CensusOptions};
use moldkit::mold::{Mold, ParabolicType};
use moldkit::sample;
use moldkit::{Field, Kind, Matrix, Representation, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fields() -> [Field; 2] {
    [Field::rationals(), Field::prime(101).unwrap()]
}

fn census() -> Outcome {
    let cases: &[(usize, usize, u64, u128)] = &[
        (2, 1, 2, 1),
        (2, 1, 3, 1),
        (2, 2, 2, 7),
        (2, 2, 3, 13),
        (2, 3, 2, 3),
        (2, 3, 3, 4),
        (2, 4, 2, 1),
        (2, 4, 3, 1),
        (3, 7, 2, 14),
        (3, 8, 2, 0),
        (3, 9, 2, 1),
    ];
    for &(n, d, q, want) in cases {
        let got = enumerate_molds(n, d, q, &CensusOptions::default()).map_err(|e| e.to_string())?.total;
        check(got == want, || format!("({n},{d},{q}): got {got}, want {want}"))?;
    }
    Ok(format!("{} census values exact", cases.len()))
}

fn borel_census() -> Outcome {
    let c = enumerate_molds(3, 6, 2, &CensusOptions::default()).map_err(|e| e.to_string())?;
    let borel = c.by_type.get("1,1,1").copied().unwrap_or(0);
    let flags = flag_point_count(&ParabolicType::borel(3), 2).map_err(|e| e.to_string())?;
    check(borel == 21 && flags == 21, || format!("type (1,1,1): {borel}, flag count {flags}"))?;
    Ok(format!("21 Borel molds among {} of rank 6", c.total))
}

fn discriminants() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let per_field = 1000;
    for field in fields() {
        for k in 0..per_field {
            let a = sample::invertible(&mut rng, field, 2, 9);
            let b = sample::invertible(&mut rng, field, 2, 9);
            let ab = &a * &b;
            let comm = &(&ab * &a.inverse().unwrap()) * &b.inverse().unwrap();
            let d2 = discriminant2(&a, &b).unwrap();
            let rhs = ab.det() * (comm.trace() - field.from_i64(2));
            let d4 = discriminant4(&Matrix::identity(field, 2), &a, &b, &ab).unwrap();
            check(d2 == rhs, || format!("commutator identity fails over {field} at sample {k}"))?;
            check(d2 == -d4, || format!("Δ2 = −Δ4 fails over {field} at sample {k}"))?;
        }
    }
    Ok(format!("{} pairs, both identities exact", 2 * per_field))
}

fn span_property() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let per_field = 300;
    for field in fields() {
        for k in 0..per_field {
            let p = sample::invertible(&mut rng, field, 2, 9);
            let p_inv = p.inverse().unwrap();
            let a = sample::upper_invertible(&mut rng, field, 2, 9).conjugate(&p, &p_inv);
            let b = sample::upper_invertible(&mut rng, field, 2, 9).conjugate(&p, &p_inv);
            check(discriminant2(&a, &b).unwrap().is_zero(), || format!("Δ ≠ 0 over {field} at sample {k}"))?;
            let (_, inside) = span_of_pair(&a, &b).unwrap();
            check(inside, || format!("closure escapes span{{I,A,B}} over {field} at sample {k}"))?;
        }
    }
    Ok(format!("{} conjugated triangular pairs", 2 * per_field))
}

/// Random Borel representations with n ∈ {2,3,4}, m ∈ {2,3}, alternating fields.
fn borel_sample(rng: &mut ChaCha8Rng, count: usize) -> Vec<Representation> {
    (0..count)
        .map(|k| {
            let field = fields()[k % 2];
            let n = 2 + (k / 2) % 3;
            let m = 2 + (k / 6) % 2;
            sample::borel(rng, field, n, m, Kind::Group, 9)
        })
        .collect()
}

fn canonical_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let reps = borel_sample(&mut rng, 240);
    for (k, rho) in reps.iter().enumerate() {
        let p = sample::invertible(&mut rng, rho.field(), rho.degree(), 9);
        let c1 = canonical_form(rho, 4).map_err(|e| format!("sample {k}: {e}"))?;
        let c2 = canonical_form(&rho.conjugate(&p).unwrap(), 4).map_err(|e| format!("sample {k}: {e}"))?;
        check(c1.to_json_string() == c2.to_json_string(), || format!("serialization differs at sample {k}"))?;
    }
    Ok(format!("{} representations, byte-identical output", reps.len()))
}

fn running_example() -> Outcome {
    let q = Field::rationals();
    let s = |a: i64, b: i64| q.parse(&format!("{a}/{b}")).unwrap();
    let alpha = Matrix::from_ints(q, &[&[1, 1], &[0, 1]]);
    let beta = Matrix::from_ints(q, &[&[2, 0], &[0, 1]]);
    let rho = Representation::new(q, 2, Kind::Group, vec![alpha.clone(), beta.clone()]).unwrap();

    // Hand derivation, index order (1,1), (2,2), (1,2) and words β, α, αβ.
    let y11 = beta.clone();
    let tau11 = y11.get(0, 0).clone();
    let y22 = &alpha - &y11.scale(&(alpha.get(0, 0) / &tau11));
    let tau22 = y22.get(1, 1).clone();
    let ab = &alpha * &beta;
    let r = &ab - &y11.scale(&(ab.get(0, 0) / &tau11));
    let y12 = &r - &y22.scale(&(r.get(1, 1) / &tau22));
    let tau12 = y12.get(0, 1).clone();
    let x12 = y12.clone();
    let x22 = y22.clone();
    let x11 = &y11 - &x22.scale(&(y11.get(1, 1) / x22.get(1, 1)));
    let hand = [tau11, tau22, tau12];

    let frozen_tau = [s(2, 1), s(1, 2), s(1, 1)];
    let frozen_x11 = Matrix::from_ints(q, &[&[2, -2], &[0, 0]]);
    let frozen_x22 = Matrix::from_rows(q, vec![vec![s(0, 1), s(1, 1)], vec![s(0, 1), s(1, 2)]]).unwrap();
    let frozen_x12 = Matrix::from_ints(q, &[&[0, 1], &[0, 0]]);
    check(hand == frozen_tau, || format!("hand τ {hand:?}"))?;
    check(x11 == frozen_x11 && x22 == frozen_x22 && x12 == frozen_x12, || "hand X disagrees".into())?;

    let words = [Word(vec![2]), Word(vec![1]), Word(vec![1, 2])];
    let data = canonical_form_with_words(&rho, &words).map_err(|e| e.to_string())?;
    let p = |i, j| IndexPair::new(i, j);
    check(data.tau == frozen_tau, || format!("τ = {:?}", data.tau))?;
    check(data.x_at(p(1, 1)) == Some(&frozen_x11), || "X(1,1)".into())?;
    check(data.x_at(p(2, 2)) == Some(&frozen_x22), || "X(2,2)".into())?;
    check(data.x_at(p(1, 2)) == Some(&frozen_x12), || "X(1,2)".into())?;
    check(data.q == Matrix::from_ints(q, &[&[1, -1], &[0, 1]]), || format!("Q = {:?}", data.q))?;
    check(data.images[0] == Matrix::from_ints(q, &[&[1, 1], &[0, 1]]), || "ρ′(α)".into())?;
    check(data.images[1] == Matrix::from_ints(q, &[&[2, 1], &[0, 1]]), || "ρ′(β)".into())?;
    Ok("τ, X, Q and images exact".into())
}

fn semi_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let count = 520;
    for k in 0..count {
        let field = fields()[k % 2];
        let n = 2 + k % 3;
        let rho = sample::borel_upper(&mut rng, field, n, 2, Kind::Group, 9);
        let b = sample::upper_invertible(&mut rng, field, n, 9);
        let sigma = rho.conjugate(&b).unwrap();
        let words = find_star_words(&rho, 4).unwrap().ok_or(format!("no word set at sample {k}"))?;
        let (StarResult::Satisfied(e1), StarResult::Satisfied(e2)) =
            (epsilon_eta(&rho, &words).unwrap(), epsilon_eta(&sigma, &words).unwrap())
        else {
            return Err(format!("star condition not transported at sample {k}"));
        };
        let order = e1.chart.order();
        for (t, ix) in order.iter().enumerate() {
            let (i, j) = ix.position();
            let want = b.get(i, i) / b.get(j, j) * &e1.chart.tau()[t];
            check(e2.chart.tau()[t] == want, || format!("τ′{ix} at sample {k}"))?;
        }
        check(e1.epsilon == e2.epsilon, || format!("ε changed at sample {k}"))?;
        let a1 = well_shaped_basis(e1.chart.y()).unwrap().a;
        let a2 = well_shaped_basis(e2.chart.y()).unwrap().a;
        check(a1 == a2, || format!("a-coefficients changed at sample {k}"))?;
    }
    Ok(format!("{count} instances"))
}

/// Representatives of the brute-force orbit classes, and each member's class.
fn orbit_classes(family: &[Representation]) -> Vec<usize> {
    let mut reps: Vec<&Representation> = Vec::new();
    family
        .iter()
        .map(|rho| match reps.iter().position(|r| conjugator_search(r, rho).unwrap().is_some()) {
            Some(c) => c,
            None => {
                reps.push(rho);
                reps.len() - 1
            }
        })
        .collect()
}

fn fixture_family(field: Field, rng: &mut ChaCha8Rng) -> Vec<Representation> {
    let q = field.order().unwrap() as i64;
    let mut uppers = Vec::new();
    let units: Vec<i64> = (1..q).collect();
    for &a in &units {
        for b in 0..q {
            for &c in &units {
                uppers.push([[a, b], [0, c]]);
            }
        }
    }
    let mat = |m: &[[i64; 2]; 2]| Matrix::from_ints(field, &[&m[0], &m[1]]);
    let mut base = Vec::new();
    for x in &uppers {
        for y in &uppers {
            let rho = Representation::new(field, 2, Kind::Group, vec![mat(x), mat(y)]).unwrap();
            if borel::is_borel(&rho) {
                base.push(rho);
            }
        }
    }
    if q > 3 {
        base = (0..60).map(|_| base[rng.gen_range(0..base.len())].clone()).collect();
    }
    let conjugators = [Matrix::from_ints(field, &[&[0, 1], &[1, 1]]), Matrix::from_ints(field, &[&[1, 0], &[2, 1]])];
    let mut family = base.clone();
    for p in &conjugators {
        family.extend(base.iter().map(|r| r.conjugate(p).unwrap()));
    }
    family
}

fn equivalence_vs_brute_force() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut pairs = 0usize;
    let mut summary = Vec::new();
    for q in [3u64, 5] {
        let field = Field::prime(q).unwrap();
        let family = fixture_family(field, &mut rng);
        let class = orbit_classes(&family);
        for i in 0..family.len() {
            for j in i..family.len() {
                let got = equivalent(&family[i], &family[j], 4).map_err(|e| e.to_string())?;
                let want = if class[i] == class[j] { Equivalence::Equivalent } else { Equivalence::Inequivalent };
                check(got == want, || format!("F_{q}: members {i}, {j}: {got:?} vs brute force {want:?}"))?;
                pairs += 1;
            }
        }
        let classes = class.iter().max().map_or(0, |c| c + 1);
        summary.push(format!("F_{q}: {} reps in {classes} classes", family.len()));
    }
    Ok(format!("{pairs} pairs agree ({})", summary.join("; ")))
}

fn parabolic_structure() -> Outcome {
    let q = Field::rationals();
    let mut checked = 0;
    for n in 1..=4 {
        for ty in ParabolicType::compositions(n) {
            let p = Mold::parabolic(q, &ty);
            check(p.normalizer() == *p.space(), || format!("normalizer of P_{ty}"))?;
            let parts = ty.parts();
            let expected = n * n
                - (0..parts.len())
                    .flat_map(|i| (i..parts.len()).map(move |j| (i, j)))
                    .map(|(i, j)| parts[i] * parts[j])
                    .sum::<usize>();
            let got = p.derivation_space().dimension;
            check(got == expected, || format!("derivations of P_{ty}: {got} vs {expected}"))?;
            let sums = ty.partial_sums();
            for r in 1..n {
                let found = p.invariant_subspaces(r).map_err(|e| e.to_string())?;
                let want = usize::from(sums.contains(&r));
                check(found.len() == want, || format!("P_{ty}: {} invariant {r}-spaces", found.len()))?;
                check(found.iter().all(|v| v.rank() == r && p.leaves_invariant(v)), || format!("P_{ty}, r = {r}"))?;
            }
            checked += 1;
        }
    }
    // Exhaustive uniqueness over small prime fields.
    for (pf, max_n) in [(2u64, 4usize), (3, 3)] {
        let field = Field::prime(pf).unwrap();
        for n in 1..=max_n {
            for ty in ParabolicType::compositions(n) {
                let p = Mold::parabolic(field, &ty);
                check(p.normalizer() == *p.space(), || format!("normalizer of P_{ty} over F_{pf}"))?;
                let sums = ty.partial_sums();
                for r in 1..n {
                    let found = p.invariant_subspaces(r).map_err(|e| e.to_string())?.len();
                    let want = usize::from(sums.contains(&r));
                    check(found == want, || format!("P_{ty} over F_{pf}: {found} invariant {r}-spaces"))?;
                }
            }
        }
    }
    Ok(format!("{checked} compositions over Q, exhaustive over F_2 and F_3"))
}

fn flag_contracts() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let reps = borel_sample(&mut rng, 240);
    for (k, rho) in reps.iter().enumerate() {
        let flag = borel::invariant_flag(rho).map_err(|e| e.to_string())?;
        for e in &flag.subspaces {
            let stable = rho.generators().iter().all(|g| e.basis().iter().all(|v| e.contains(&g.mul_vec(v))));
            check(stable, || format!("flag member not invariant at sample {k}"))?;
        }
        let (_, tri) = borel::triangularize(rho).map_err(|e| e.to_string())?;
        let n = rho.degree();
        let lower_zero = tri.generators().iter().all(|g| (0..n).all(|i| (0..i).all(|j| g.get(i, j).is_zero())));
        check(lower_zero, || format!("nonzero sub-diagonal entry at sample {k}"))?;
        let p = sample::invertible(&mut rng, rho.field(), n, 9);
        let chi = borel::characters(rho).unwrap();
        let chi_conj = borel::characters(&rho.conjugate(&p).unwrap()).unwrap();
        check(chi == chi_conj, || format!("characters differ at sample {k}"))?;
    }
    Ok(format!("{} representations", reps.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("mold census", census),
        ("Borel sub-census", borel_census),
        ("discriminant identities", discriminants),
        ("span of a triangularizable pair", span_property),
        ("canonical-form invariance", canonical_invariance),
        ("worked example", running_example),
        ("semi-invariance", semi_invariance),
        ("equivalence vs brute force", equivalence_vs_brute_force),
        ("parabolic structure", parabolic_structure),
        ("flag and triangularization", flag_contracts),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {:2} {name}: {detail} [{secs:.1}s]", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {:2} {name}: {detail} [{secs:.1}s]", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
