use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::comb::Perm;
use crate::error::{domain, parse};
use crate::Result;

/// A composition of `n`: an ordered list of positive parts. The empty
/// composition (size and length zero) is a first-class value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(domain("composition parts must be positive"));
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Size `n` (sum of parts).
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts[i]
    }

    /// The subset of `[n-1]` of partial sums, inverse to [`Composition::from_subset`].
    pub fn to_subset(&self) -> Vec<u32> {
        let mut acc = 0;
        let mut out = Vec::new();
        for &p in self.parts.iter().take(self.parts.len().saturating_sub(1)) {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// The composition of `n` whose partial sums are exactly `subset ⊆ [n-1]`.
    pub fn from_subset(subset: &[u32], n: u32) -> Result<Self> {
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != subset.len() {
            return Err(domain("subset has repeated elements"));
        }
        if let Some(&last) = sorted.last() {
            if last >= n || sorted[0] == 0 {
                return Err(domain(format!("subset element outside [{}]", n.saturating_sub(1))));
            }
        }
        let mut parts = Vec::with_capacity(sorted.len() + 1);
        let mut prev = 0;
        for &s in &sorted {
            parts.push(s - prev);
            prev = s;
        }
        if n > 0 {
            parts.push(n - prev);
        } else if !sorted.is_empty() {
            return Err(domain("subset nonempty but n = 0"));
        }
        Composition::new(parts)
    }

    /// Parts in reverse order.
    pub fn reverse(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }

    /// The complement: the composition whose subset is `[n-1]` minus ours.
    pub fn complement(&self) -> Self {
        let n = self.size();
        let ours = self.to_subset();
        let rest: Vec<u32> = (1..n).filter(|i| !ours.contains(i)).collect();
        Composition::from_subset(&rest, n).expect("complement subset is valid")
    }

    /// Transpose: reverse of the complement (equivalently complement of the reverse).
    pub fn transpose(&self) -> Self {
        self.reverse().complement()
    }

    /// Parts sorted weakly decreasing.
    pub fn to_partition(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Composition { parts }
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// `(n-k, 1^k)` shapes, including single rows and single columns.
    pub fn is_hook(&self) -> bool {
        match self.parts.split_first() {
            None => true,
            Some((_, rest)) => rest.iter().all(|&p| p == 1),
        }
    }

    /// Right place-permutation action: `(α·σ)_i = α_{σ(i)}`, so `α·w0 = α^r`
    /// and `(α·σ)·ρ = α·(σρ)` with `σρ` the usual composition (ρ applied first).
    pub fn permute_parts(&self, sigma: &Perm) -> Result<Self> {
        if sigma.degree() != self.len() {
            return Err(domain(format!(
                "permutation degree {} does not match composition length {}",
                sigma.degree(),
                self.len()
            )));
        }
        let parts = (0..self.len()).map(|i| self.parts[sigma.image(i + 1) - 1]).collect();
        Ok(Composition { parts })
    }

    /// Swap parts `i` and `i+1` (1-indexed), i.e. the place action of `s_i`.
    pub fn swap_adjacent(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.len() {
            return Err(domain(format!("adjacent swap index {i} out of range")));
        }
        let mut parts = self.parts.clone();
        parts.swap(i - 1, i);
        Ok(Composition { parts })
    }

    /// Concatenation `α · β`.
    pub fn concat(&self, other: &Composition) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Composition { parts }
    }

    /// Near concatenation `α ⊙ β`: the last part of `α` absorbs the first part of `β`.
    pub fn near_concat(&self, other: &Composition) -> Result<Self> {
        if self.is_empty() || other.is_empty() {
            return Err(domain("near concatenation needs nonempty operands"));
        }
        let mut parts = self.parts.clone();
        *parts.last_mut().unwrap() += other.parts[0];
        parts.extend_from_slice(&other.parts[1..]);
        Ok(Composition { parts })
    }

    /// Whether `self ⪰ other`: `self` is obtained by merging adjacent parts of
    /// `other`, equivalently `set(self) ⊆ set(other)`.
    pub fn coarsens(&self, other: &Composition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(domain("coarsening compares compositions of equal size"));
        }
        let fine = other.to_subset();
        Ok(self.to_subset().iter().all(|s| fine.contains(s)))
    }

    /// Whether `self` covers `other` in the coarsening order (merging exactly
    /// one adjacent pair).
    pub fn covers(&self, other: &Composition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(domain("cover compares compositions of equal size"));
        }
        let coarse = self.to_subset();
        let fine = other.to_subset();
        Ok(coarse.len() + 1 == fine.len() && coarse.iter().all(|s| fine.contains(s)))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl FromStr for Composition {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(Composition::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| parse(format!("bad part {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// All compositions of `n` in lexicographic order of part lists.
pub fn compositions_of(n: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if rem == 0 {
            out.push(Composition { parts: cur.clone() });
            return;
        }
        for first in 1..=rem {
            cur.push(first);
            rec(rem - first, cur, out);
            cur.pop();
        }
    }
    rec(n, &mut cur, &mut out);
    out.sort();
    out
}

/// A generalized composition: a nonempty ordered list of nonempty blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneralizedComposition {
    blocks: Vec<Composition>,
}

impl GeneralizedComposition {
    pub fn new(blocks: Vec<Composition>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(domain("generalized composition needs at least one block"));
        }
        if blocks.iter().any(|b| b.is_empty()) {
            return Err(domain("generalized composition blocks must be nonempty"));
        }
        Ok(GeneralizedComposition { blocks })
    }

    pub fn single(block: Composition) -> Result<Self> {
        GeneralizedComposition::new(vec![block])
    }

    pub fn blocks(&self) -> &[Composition] {
        &self.blocks
    }

    pub fn size(&self) -> u32 {
        self.blocks.iter().map(Composition::size).sum()
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// The `2^(m-1)` compositions obtained by joining consecutive blocks with
    /// either concatenation or near concatenation.
    pub fn bracket_set(&self) -> Vec<Composition> {
        let m = self.blocks.len();
        let mut out = Vec::with_capacity(1 << (m - 1));
        for mask in 0u32..(1 << (m - 1)) {
            let mut acc = self.blocks[0].clone();
            for (k, block) in self.blocks.iter().enumerate().skip(1) {
                if mask & (1 << (k - 1)) != 0 {
                    acc = acc.near_concat(block).expect("blocks are nonempty");
                } else {
                    acc = acc.concat(block);
                }
            }
            out.push(acc);
        }
        out.sort();
        out.dedup();
        out
    }

    /// The maximal bracket element: all blocks joined by near concatenation.
    pub fn alpha_max(&self) -> Composition {
        let mut acc = self.blocks[0].clone();
        for block in &self.blocks[1..] {
            acc = acc.near_concat(block).expect("blocks are nonempty");
        }
        acc
    }

    /// The minimal bracket element: plain concatenation of all blocks.
    pub fn alpha_min(&self) -> Composition {
        let mut acc = self.blocks[0].clone();
        for block in &self.blocks[1..] {
            acc = acc.concat(block);
        }
        acc
    }
}

impl fmt::Display for GeneralizedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.blocks.iter().map(|b| b.to_string()).collect();
        write!(f, "{}", strs.join("|"))
    }
}

impl FromStr for GeneralizedComposition {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        let blocks = s
            .split('|')
            .map(|b| b.parse::<Composition>())
            .collect::<Result<Vec<_>>>()?;
        GeneralizedComposition::new(blocks)
    }
}

impl Serialize for GeneralizedComposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl From<Composition> for GeneralizedComposition {
    fn from(c: Composition) -> Self {
        GeneralizedComposition::single(c).expect("single block from nonempty composition")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn subset_of_definitional_examples() {
        assert_eq!(c(&[3, 1, 2]).to_subset(), vec![3, 4]);
        assert_eq!(Composition::from_subset(&[2, 4], 5).unwrap(), c(&[2, 2, 1]));
    }

    #[test]
    fn subset_round_trip_exhaustive() {
        for n in 0..=8 {
            for alpha in compositions_of(n) {
                let back = Composition::from_subset(&alpha.to_subset(), n).unwrap();
                assert_eq!(back, alpha);
            }
        }
    }

    #[test]
    fn subset_rejects_out_of_range() {
        assert!(Composition::from_subset(&[5], 5).is_err());
        assert!(Composition::from_subset(&[0], 5).is_err());
    }

    #[test]
    fn complement_example() {
        assert_eq!(c(&[1, 2, 2]).complement(), c(&[2, 2, 1]));
    }

    #[test]
    fn empty_composition_unary_ops() {
        let e = Composition::empty();
        assert_eq!(e.reverse(), e);
        assert_eq!(e.complement(), e);
        assert_eq!(e.transpose(), e);
        assert_eq!(e.to_partition(), e);
        assert_eq!(e.size(), 0);
        assert_eq!(e.len(), 0);
    }

    #[test]
    fn involutions_exhaustive() {
        for n in 0..=8 {
            for alpha in compositions_of(n) {
                assert_eq!(alpha.reverse().reverse(), alpha);
                assert_eq!(alpha.complement().complement(), alpha);
                assert_eq!(alpha.transpose().transpose(), alpha);
                assert_eq!(alpha.transpose(), alpha.complement().reverse());
            }
        }
    }

    #[test]
    fn partition_sorting() {
        assert_eq!(c(&[1, 2, 1, 1, 2]).to_partition(), c(&[2, 2, 1, 1, 1]));
    }

    #[test]
    fn place_action_reverses_with_w0() {
        let alpha = c(&[2, 1, 2]);
        let w0 = Perm::longest(3);
        assert_eq!(alpha.permute_parts(&w0).unwrap(), alpha.reverse());
    }

    #[test]
    fn place_action_is_a_right_action() {
        let alpha = c(&[3, 1, 2]);
        for sigma in Perm::all(3) {
            for rho in Perm::all(3) {
                let lhs = alpha.permute_parts(&sigma).unwrap().permute_parts(&rho).unwrap();
                let rhs = alpha.permute_parts(&sigma.compose(&rho)).unwrap();
                assert_eq!(lhs, rhs);
            }
            let inv = sigma.inverse();
            assert_eq!(alpha.permute_parts(&sigma).unwrap().permute_parts(&inv).unwrap(), alpha);
        }
    }

    #[test]
    fn place_action_length_mismatch() {
        assert!(c(&[1, 2]).permute_parts(&Perm::identity(3)).is_err());
    }

    #[test]
    fn bracket_set_small() {
        let g = GeneralizedComposition::new(vec![c(&[2, 1]), c(&[2])]).unwrap();
        assert_eq!(g.bracket_set(), vec![c(&[2, 1, 2]), c(&[2, 3])]);
    }

    #[test]
    fn bracket_extremes() {
        let g = GeneralizedComposition::new(vec![c(&[1]), c(&[1]), c(&[2, 1, 2, 2])]).unwrap();
        assert_eq!(g.alpha_min(), c(&[1, 1, 2, 1, 2, 2]));
        assert_eq!(g.alpha_max(), c(&[4, 1, 2, 2]));
        // The mixed choice concat-then-near-concat is a bracket element.
        let mixed = c(&[1, 3, 1, 2, 2]);
        assert!(g.bracket_set().contains(&mixed));
        for beta in g.bracket_set() {
            assert!(g.alpha_max().coarsens(&beta).unwrap());
            assert!(beta.coarsens(&g.alpha_min()).unwrap());
        }
    }

    #[test]
    fn bracket_cardinality() {
        for blocks in [
            vec![c(&[1])],
            vec![c(&[2]), c(&[1, 1])],
            vec![c(&[1]), c(&[2]), c(&[1])],
            vec![c(&[1]), c(&[1]), c(&[1]), c(&[2])],
        ] {
            let m = blocks.len();
            let g = GeneralizedComposition::new(blocks).unwrap();
            assert_eq!(g.bracket_set().len(), 1 << (m - 1));
        }
    }

    #[test]
    fn coarsening_examples() {
        assert!(c(&[2, 3]).coarsens(&c(&[2, 1, 2])).unwrap());
        assert!(!c(&[2, 3]).coarsens(&c(&[3, 2])).unwrap());
        assert!(c(&[2, 3]).coarsens(&c(&[2, 3])).unwrap());
        assert!(c(&[2, 3]).coarsens(&c(&[3, 2])).is_ok());
        assert!(c(&[2, 3]).coarsens(&c(&[2, 2])).is_err());
    }

    #[test]
    fn covers_matches_no_intermediate_bruteforce() {
        for n in 1..=6 {
            let all = compositions_of(n);
            for a in &all {
                for b in &all {
                    let cov = a.covers(b).unwrap();
                    let strict = a != b && a.coarsens(b).unwrap();
                    let has_mid = all.iter().any(|m| {
                        m != a && m != b && a.coarsens(m).unwrap() && m.coarsens(b).unwrap()
                    });
                    assert_eq!(cov, strict && !has_mid, "cover mismatch {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("2,2,1".parse::<Composition>().unwrap(), c(&[2, 2, 1]));
        assert_eq!(c(&[2, 2, 1]).to_string(), "2,2,1");
        let g: GeneralizedComposition = "1|1,2,1,1,2,1".parse().unwrap();
        assert_eq!(g.blocks().len(), 2);
        assert_eq!(g.to_string(), "1|1,2,1,1,2,1");
        assert!("0,1".parse::<Composition>().is_err());
        assert!("a".parse::<Composition>().is_err());
    }
}
