use rand::Rng;
use strong_dichotomies::poset::FinitePoset;

/// A random partial order on `len` points: the transitive closure of a
/// random relation that only points forward.
pub fn random_poset(rng: &mut impl Rng, len: usize) -> FinitePoset {
    let mut rel = vec![false; len * len];
    for i in 0..len {
        rel[i * len + i] = true;
        for j in i + 1..len {
            rel[i * len + j] = rng.gen_bool(0.3);
        }
    }
    for m in 0..len {
        for i in 0..len {
            for j in 0..len {
                if rel[i * len + m] && rel[m * len + j] {
                    rel[i * len + j] = true;
                }
            }
        }
    }
    FinitePoset::from_table(len, rel).unwrap()
}
