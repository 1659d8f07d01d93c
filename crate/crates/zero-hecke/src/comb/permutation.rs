use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::comb::Composition;
use crate::error::{domain, parse};
use crate::Result;

/// A permutation of `[k]` in one-line notation, 1-indexed everywhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &v in &images {
            if v == 0 || v > k || seen[v - 1] {
                return Err(domain(format!("{images:?} is not a permutation of [{k}]")));
            }
            seen[v - 1] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(k: usize) -> Self {
        Perm { images: (1..=k).collect() }
    }

    /// The longest element `w0` of `S_k`.
    pub fn longest(k: usize) -> Self {
        Perm { images: (1..=k).rev().collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `σ(i)` for 1-indexed `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Inversion count, equal to the reduced-word length.
    pub fn length(&self) -> usize {
        let k = self.images.len();
        let mut count = 0;
        for i in 0..k {
            for j in i + 1..k {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Perm { images }
    }

    /// Function composition: `(self ∘ other)(i) = self(other(i))`, so `other`
    /// acts first. Right place actions satisfy `(α·σ)·ρ = α·(σ.compose(ρ))`.
    pub fn compose(&self, other: &Perm) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in composition");
        let images = other.images.iter().map(|&v| self.images[v - 1]).collect();
        Perm { images }
    }

    /// The adjacent transposition `s_i` in `S_k` (1-indexed, `i < k`).
    pub fn transposition(k: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= k {
            return Err(domain(format!("s_{i} does not exist in S_{k}")));
        }
        let mut images: Vec<usize> = (1..=k).collect();
        images.swap(i - 1, i);
        Ok(Perm { images })
    }

    /// Right multiplication by `s_i`: swaps positions `i` and `i+1`.
    pub fn mul_s_right(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.degree() {
            return Err(domain(format!("s_{i} out of range for degree {}", self.degree())));
        }
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Ok(Perm { images })
    }

    /// Left multiplication by `s_i`: swaps the values `i` and `i+1`.
    pub fn mul_s_left(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.degree() {
            return Err(domain(format!("s_{i} out of range for degree {}", self.degree())));
        }
        let images = self
            .images
            .iter()
            .map(|&v| {
                if v == i {
                    i + 1
                } else if v == i + 1 {
                    i
                } else {
                    v
                }
            })
            .collect();
        Ok(Perm { images })
    }

    /// One reduced word `[i_1, ..., i_p]` with `σ = s_{i_1} ⋯ s_{i_p}`,
    /// produced by repeatedly clearing the leftmost descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut cur = self.clone();
        while let Some(i) = (1..cur.degree()).find(|&i| cur.image(i) > cur.image(i + 1)) {
            // cur = cur' s_i with cur' shorter; peel letters off the right.
            word.push(i);
            cur = cur.mul_s_right(i).unwrap();
        }
        word.reverse();
        debug_assert_eq!(word.len(), self.length());
        word
    }

    /// A reduced word built by clearing the rightmost descent instead; used to
    /// exercise word independence in tests.
    pub fn reduced_word_alt(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut cur = self.clone();
        while let Some(i) = (1..cur.degree()).rev().find(|&i| cur.image(i) > cur.image(i + 1)) {
            word.push(i);
            cur = cur.mul_s_right(i).unwrap();
        }
        word.reverse();
        debug_assert_eq!(word.len(), self.length());
        word
    }

    /// Conjugation by the longest element: `σ^{w0}(i) = k+1 - σ(k+1-i)`.
    pub fn conjugate_by_w0(&self) -> Self {
        let k = self.degree();
        let images = (1..=k).map(|i| k + 1 - self.images[k - i]).collect();
        Perm { images }
    }

    /// The longest element of the parabolic subgroup generated by `{s_i : i ∈ set}`.
    pub fn longest_parabolic(k: usize, set: &[usize]) -> Self {
        // Blocks of consecutive generators give independent symmetric groups;
        // reverse each block of positions.
        let mut images: Vec<usize> = (1..=k).collect();
        let mut i = 1;
        while i < k {
            if set.contains(&i) {
                let start = i;
                let mut end = i;
                while end < k && set.contains(&end) {
                    end += 1;
                }
                images[start - 1..end].reverse();
                i = end + 1;
            } else {
                i += 1;
            }
        }
        Perm { images }
    }

    /// All permutations of `[k]`, sorted lexicographically.
    pub fn all(k: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = Vec::new();
        let mut used = vec![false; k];
        fn rec(k: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
            if cur.len() == k {
                out.push(Perm { images: cur.clone() });
                return;
            }
            for v in 1..=k {
                if !used[v - 1] {
                    used[v - 1] = true;
                    cur.push(v);
                    rec(k, cur, used, out);
                    cur.pop();
                    used[v - 1] = false;
                }
            }
        }
        rec(k, &mut cur, &mut used, &mut out);
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() > 9 {
            let strs: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
            return write!(f, "[{}]", strs.join(","));
        }
        for &v in &self.images {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Perm {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(parse("empty permutation string"));
        }
        let images = trimmed
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .filter(|&d| d > 0)
                    .map(|d| d as usize)
                    .ok_or_else(|| parse(format!("bad permutation digit {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Perm::new(images)
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// `α` is compatible with `σ` when `α_i ≥ α_j` for every inversion `i<j`,
/// `σ(i) > σ(j)`. This is exactly the nonemptiness condition for the permuted
/// composition tableau family.
pub fn is_compatible(alpha: &Composition, sigma: &Perm) -> Result<bool> {
    if sigma.degree() != alpha.len() {
        return Err(domain(format!(
            "compatibility needs σ ∈ S_{}, got degree {}",
            alpha.len(),
            sigma.degree()
        )));
    }
    let k = alpha.len();
    for i in 1..=k {
        for j in i + 1..=k {
            if sigma.image(i) > sigma.image(j) && alpha.part(i - 1) < alpha.part(j - 1) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The set of permutations sorting `α^r` to `λ(α)` by place permutation,
/// together with its tie-ordering extremes.
#[derive(Debug, Clone)]
pub struct SortingInterval {
    pub min: Perm,
    pub max: Perm,
    pub all: Vec<Perm>,
}

/// Enumerates `{σ : λ(α) = α^r · σ}`; its size is `∏ mᵢ!` over part
/// multiplicities. `σ_min` keeps ties in their original order, `σ_max`
/// reverses them.
pub fn sorting_interval(alpha: &Composition) -> Result<SortingInterval> {
    if alpha.is_empty() {
        return Err(domain("sorting interval needs a nonempty composition"));
    }
    let rev = alpha.reverse();
    let lambda = alpha.to_partition();
    let k = alpha.len();

    let all: Vec<Perm> = Perm::all(k)
        .into_iter()
        .filter(|sigma| rev.permute_parts(sigma).unwrap() == lambda)
        .collect();

    // σ(i) = position in α^r of the i-th entry of the sorted sequence; stable
    // tie order gives σ_min, reversed tie order gives σ_max.
    let mut positions: Vec<usize> = (0..k).collect();
    positions.sort_by(|&a, &b| rev.part(b).cmp(&rev.part(a)).then(a.cmp(&b)));
    let min = Perm::new(positions.iter().map(|&p| p + 1).collect())?;

    let mut positions: Vec<usize> = (0..k).collect();
    positions.sort_by(|&a, &b| rev.part(b).cmp(&rev.part(a)).then(b.cmp(&a)));
    let max = Perm::new(positions.iter().map(|&p| p + 1).collect())?;

    debug_assert!(all.contains(&min) && all.contains(&max));
    Ok(SortingInterval { min, max, all })
}
