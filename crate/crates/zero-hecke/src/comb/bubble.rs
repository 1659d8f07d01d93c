use crate::comb::Perm;
use crate::error::domain;
use crate::Result;

/// One bubble-sorting step on an integer vector: swap positions `i`, `i+1`
/// (1-indexed) exactly when `m_i < m_{i+1}`, sorting toward weakly decreasing.
pub fn bubble_step(m: &[u32], i: usize) -> Result<Vec<u32>> {
    if i == 0 || i >= m.len() {
        return Err(domain(format!("bubble index {i} out of range for length {}", m.len())));
    }
    let mut out = m.to_vec();
    if out[i - 1] < out[i] {
        out.swap(i - 1, i);
    }
    Ok(out)
}

/// Applies a reduced word of `σ` letter by letter, left to right. The result
/// is independent of the chosen reduced word, which the test suite checks by
/// comparing two words per permutation.
pub fn bubble_word(m: &[u32], sigma: &Perm) -> Result<Vec<u32>> {
    let mut cur = m.to_vec();
    for i in sigma.reduced_word() {
        cur = bubble_step(&cur, i)?;
    }
    Ok(cur)
}
