//! Named square-free monomial ideals used across the test and acceptance
//! suites: edge ideals of paths, cycles, stars, and complete graphs, the
//! four-cycle ideal, a nine-generator ideal with a deep power relation, and
//! seeded random square-free ideals.

use rand::Rng;
use rand::SeedableRng;

use crate::monomial::{Monomial, MonomialIdeal, VariableSet};

fn numbered_vars(n: usize) -> VariableSet {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    VariableSet::new(names).expect("numbered names are distinct")
}

/// Edge ideal of a graph on `n` vertices: one generator `x_i x_j` per edge.
pub fn edge_ideal(n: usize, edges: &[(usize, usize)]) -> MonomialIdeal {
    let vars = numbered_vars(n);
    let gens: Vec<Monomial> = edges
        .iter()
        .map(|&(a, b)| {
            assert!(a < n && b < n && a != b, "edge ({a},{b}) out of range");
            let mut exps = vec![0u64; n];
            exps[a] = 1;
            exps[b] = 1;
            Monomial::from_u64_exps(&exps)
        })
        .collect();
    MonomialIdeal::new(vars, gens).expect("edge generators are well formed")
}

/// Edge ideal of the path on `n` vertices (`n - 1` generators).
pub fn path_ideal(n: usize) -> MonomialIdeal {
    assert!(n >= 2);
    let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edge_ideal(n, &edges)
}

/// Edge ideal of the cycle on `n` vertices (`n` generators).
pub fn cycle_ideal(n: usize) -> MonomialIdeal {
    assert!(n >= 3);
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    edge_ideal(n, &edges)
}

/// Edge ideal of the star with `k` leaves (`k` generators sharing vertex 0).
pub fn star_ideal(k: usize) -> MonomialIdeal {
    assert!(k >= 1);
    let edges: Vec<(usize, usize)> = (1..=k).map(|i| (0, i)).collect();
    edge_ideal(k + 1, &edges)
}

/// Edge ideal of the complete graph on `n` vertices.
pub fn complete_ideal(n: usize) -> MonomialIdeal {
    assert!(n >= 2);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            edges.push((a, b));
        }
    }
    edge_ideal(n, &edges)
}

/// The four-cycle ideal (xy, yz, zw, xw) in variables x, y, z, w.
pub fn square_ideal() -> MonomialIdeal {
    let vars = VariableSet::new(vec!["x", "y", "z", "w"]).unwrap();
    MonomialIdeal::from_square_free(
        vars,
        &[&["x", "y"], &["y", "z"], &["z", "w"], &["x", "w"]],
    )
    .unwrap()
}

/// Nine generators in nine variables with the degree-six relation
/// m1^4 m2 m3 = m4 m5 m6 m7 m8 m9, which forces a nontrivial
/// representative choice at power six.
pub fn nine_generator_ideal() -> MonomialIdeal {
    let vars =
        VariableSet::new(vec!["a", "b", "c", "d", "e", "f", "x", "y", "z"]).unwrap();
    MonomialIdeal::from_square_free(
        vars,
        &[
            &["x", "y", "z"],
            &["a", "b", "c"],
            &["d", "e", "f"],
            &["x", "z", "a"],
            &["x", "z", "b"],
            &["x", "y", "c"],
            &["x", "y", "d"],
            &["y", "z", "e"],
            &["y", "z", "f"],
        ],
    )
    .unwrap()
}

/// A random square-free ideal with exactly `q` minimal generators over
/// `n_vars` variables. Panics if 200 attempts fail to produce one (the
/// seeds used by the suites are known to succeed).
pub fn random_square_free_ideal(
    rng: &mut impl Rng,
    n_vars: usize,
    q: usize,
) -> MonomialIdeal {
    assert!(q >= 1 && n_vars >= 1);
    let vars = numbered_vars(n_vars);
    for _ in 0..5000 {
        let mut gens = Vec::with_capacity(q);
        for _ in 0..q {
            loop {
                let exps: Vec<u64> = (0..n_vars).map(|_| rng.random_range(0..2)).collect();
                if exps.iter().any(|e| *e == 1) {
                    gens.push(Monomial::from_u64_exps(&exps));
                    break;
                }
            }
        }
        let minimal = crate::monomial::minimalize(&gens);
        if minimal.len() == q {
            let ideal = MonomialIdeal::new(vars.clone(), minimal).unwrap();
            debug_assert!(ideal.is_minimal() && ideal.is_square_free());
            return ideal;
        }
    }
    panic!("no {q}-generator square-free ideal over {n_vars} variables in 5000 draws");
}

/// One named (ideal, power) pair for a suite.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub ideal: MonomialIdeal,
    pub r: u64,
}

fn entry(name: &str, ideal: MonomialIdeal, r: u64) -> CorpusEntry {
    CorpusEntry {
        name: format!("{name} power {r}"),
        ideal,
        r,
    }
}

/// The corpus for the resolution-support checks: 21 (ideal, power) pairs
/// spanning paths, cycles, complete graphs, the four-cycle, the
/// nine-generator ideal, and seeded random ideals.
pub fn support_corpus() -> Vec<CorpusEntry> {
    let mut out = vec![
        entry("path3", path_ideal(3), 3),
        entry("path4", path_ideal(4), 3),
        entry("path5", path_ideal(5), 3),
        entry("path6", path_ideal(6), 2),
        entry("path7", path_ideal(7), 2),
        entry("cycle3", cycle_ideal(3), 3),
        entry("cycle4", cycle_ideal(4), 2),
        entry("cycle5", cycle_ideal(5), 2),
        entry("cycle6", cycle_ideal(6), 2),
        entry("complete4", complete_ideal(4), 2),
        entry("complete5", complete_ideal(5), 1),
        entry("complete6", complete_ideal(6), 1),
        entry("four-cycle", square_ideal(), 2),
        entry("four-cycle", square_ideal(), 3),
        entry("nine-gen", nine_generator_ideal(), 1),
        entry("nine-gen", nine_generator_ideal(), 2),
    ];
    let random_specs: [(u64, usize, usize, u64); 5] = [
        (11, 6, 4, 2),
        (22, 7, 5, 2),
        (33, 8, 5, 3),
        (44, 6, 3, 3),
        (55, 8, 4, 2),
    ];
    for (seed, n, q, r) in random_specs {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        out.push(entry(
            &format!("random-seed{seed}-n{n}-q{q}"),
            random_square_free_ideal(&mut rng, n, q),
            r,
        ));
    }
    out
}

/// The corpus for Betti-number comparison against the extremal ideals:
/// ideals with at most four generators, each at powers one and two.
pub fn betti_comparison_corpus() -> Vec<CorpusEntry> {
    let mut ideals: Vec<(String, MonomialIdeal)> = vec![
        ("path3".into(), path_ideal(3)),
        ("path4".into(), path_ideal(4)),
        ("path5".into(), path_ideal(5)),
        ("cycle3".into(), cycle_ideal(3)),
        ("star3".into(), star_ideal(3)),
        ("four-cycle".into(), square_ideal()),
    ];
    for (seed, n, q) in [(66u64, 6usize, 4usize), (77, 5, 3)] {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        ideals.push((
            format!("random-seed{seed}-n{n}-q{q}"),
            random_square_free_ideal(&mut rng, n, q),
        ));
    }
    let mut out = Vec::new();
    for (name, ideal) in ideals {
        for r in 1..=2u64 {
            out.push(entry(&name, ideal.clone(), r));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn family_generator_counts() {
        assert_eq!(path_ideal(3).n_gens(), 2);
        assert_eq!(path_ideal(6).n_gens(), 5);
        assert_eq!(cycle_ideal(5).n_gens(), 5);
        assert_eq!(star_ideal(4).n_gens(), 4);
        assert_eq!(complete_ideal(5).n_gens(), 10);
        assert_eq!(square_ideal().n_gens(), 4);
        assert_eq!(nine_generator_ideal().n_gens(), 9);
    }

    #[test]
    fn families_are_square_free_and_minimal() {
        let ideals = [
            path_ideal(5),
            cycle_ideal(6),
            star_ideal(3),
            complete_ideal(4),
            square_ideal(),
            nine_generator_ideal(),
        ];
        for ideal in &ideals {
            ideal.require_square_free_minimal().unwrap();
        }
    }

    #[test]
    fn nine_generator_relation_holds() {
        let ideal = nine_generator_ideal();
        let g = ideal.gens();
        let lhs = g[0].pow(&BigUint::from(4u32)).mul(&g[1]).unwrap().mul(&g[2]).unwrap();
        let mut rhs = g[3].clone();
        for k in 4..9 {
            rhs = rhs.mul(&g[k]).unwrap();
        }
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn random_ideals_are_deterministic_per_seed() {
        let mut a = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut b = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let i1 = random_square_free_ideal(&mut a, 6, 4);
        let i2 = random_square_free_ideal(&mut b, 6, 4);
        assert_eq!(i1, i2);
        assert_eq!(i1.n_gens(), 4);
        i1.require_square_free_minimal().unwrap();
    }

    #[test]
    fn support_corpus_has_at_least_twenty_entries() {
        let corpus = support_corpus();
        assert!(corpus.len() >= 20, "{} entries", corpus.len());
        for e in &corpus {
            e.ideal.require_square_free_minimal().unwrap();
            assert!(e.r >= 1);
        }
        let names: std::collections::BTreeSet<&str> =
            corpus.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names.len(), corpus.len(), "entry names are distinct");
    }

    #[test]
    fn betti_corpus_stays_within_the_guard() {
        let corpus = betti_comparison_corpus();
        assert!(!corpus.is_empty());
        for e in &corpus {
            assert!(e.ideal.n_gens() <= 4, "{}", e.name);
            assert!(e.r <= 2, "{}", e.name);
        }
    }
}
