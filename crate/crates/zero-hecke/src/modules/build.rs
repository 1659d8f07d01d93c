use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::comb::{is_compatible, Composition, GeneralizedComposition, Perm};
use crate::error::{domain, internal};
use crate::modules::action::Action;
use crate::modules::rep::{Basis, GenStyle, ModuleRep};
use crate::tableaux::{enumerate_family, Family, Tableau};
use crate::Result;

/// The module families the library can build.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleKind {
    /// Ribbon span with the idempotent-style action (fix / kill / swap).
    RibbonBar(GeneralizedComposition),
    /// Ribbon span with the shifted action (negate / kill / swap).
    Ribbon(GeneralizedComposition),
    /// Immaculate tableau module.
    Immaculate(Composition),
    /// Extended tableau module.
    Extended(Composition),
    /// Permuted composition tableau module of a type.
    Permuted(Composition, Perm),
    /// Permuted Young composition tableau module of a type.
    PermutedYoung(Composition, Perm),
    /// One-dimensional simple module indexed by a composition.
    Simple(Composition),
}

impl ModuleKind {
    pub fn n(&self) -> u32 {
        match self {
            ModuleKind::RibbonBar(g) | ModuleKind::Ribbon(g) => g.size(),
            ModuleKind::Immaculate(c)
            | ModuleKind::Extended(c)
            | ModuleKind::Permuted(c, _)
            | ModuleKind::PermutedYoung(c, _)
            | ModuleKind::Simple(c) => c.size(),
        }
    }

    pub fn cli_name(&self) -> &'static str {
        match self {
            ModuleKind::RibbonBar(_) => "pbar",
            ModuleKind::Ribbon(_) => "p",
            ModuleKind::Immaculate(_) => "v",
            ModuleKind::Extended(_) => "x",
            ModuleKind::Permuted(..) => "s",
            ModuleKind::PermutedYoung(..) => "shat",
            ModuleKind::Simple(_) => "f",
        }
    }

    /// Parses `(kind, shape, sigma)` CLI arguments.
    pub fn from_cli(kind: &str, shape: &str, sigma: Option<&str>) -> Result<ModuleKind> {
        let need_sigma = || -> Result<Perm> {
            sigma
                .ok_or_else(|| domain(format!("kind {kind:?} needs --sigma")))?
                .parse::<Perm>()
        };
        let single = || shape.parse::<Composition>();
        let general = || shape.parse::<GeneralizedComposition>();
        let out = match kind {
            "pbar" => ModuleKind::RibbonBar(general()?),
            "p" => ModuleKind::Ribbon(general()?),
            "v" => ModuleKind::Immaculate(single()?),
            "x" => ModuleKind::Extended(single()?),
            "s" => ModuleKind::Permuted(single()?, need_sigma()?),
            "shat" => ModuleKind::PermutedYoung(single()?, need_sigma()?),
            "f" => ModuleKind::Simple(single()?),
            other => return Err(domain(format!("unknown module kind {other:?}"))),
        };
        if !matches!(out, ModuleKind::Permuted(..) | ModuleKind::PermutedYoung(..))
            && sigma.is_some()
        {
            return Err(domain(format!("kind {kind:?} does not take --sigma")));
        }
        Ok(out)
    }
}

impl fmt::Display for ModuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleKind::RibbonBar(g) => write!(f, "pbar({g})"),
            ModuleKind::Ribbon(g) => write!(f, "p({g})"),
            ModuleKind::Immaculate(c) => write!(f, "v({c})"),
            ModuleKind::Extended(c) => write!(f, "x({c})"),
            ModuleKind::Permuted(c, s) => write!(f, "s({c};{s})"),
            ModuleKind::PermutedYoung(c, s) => write!(f, "shat({c};{s})"),
            ModuleKind::Simple(c) => write!(f, "f({c})"),
        }
    }
}

impl FromStr for ModuleKind {
    type Err = crate::Error;

    /// Parses the display form, e.g. `s(2,2,1;132)` or `pbar(1|2,1)`.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s
            .split_once('(')
            .ok_or_else(|| domain(format!("malformed module kind {s:?}")))?;
        let args = rest
            .strip_suffix(')')
            .ok_or_else(|| domain(format!("malformed module kind {s:?}")))?;
        let (shape, sigma) = match args.split_once(';') {
            Some((a, b)) => (a, Some(b)),
            None => (args, None),
        };
        ModuleKind::from_cli(kind, shape, sigma)
    }
}

/// Whether the permuted Young family is nonempty for `(α, σ)`.
pub fn spyct_compatible(alpha: &Composition, sigma: &Perm) -> Result<bool> {
    is_compatible(&alpha.reverse(), &sigma.conjugate_by_w0())
}

/// Builds the requested module with exact generator matrices and certifies
/// the presentation. An incompatible permuted type yields a zero module with
/// the `incompatible` flag set rather than an error.
pub fn build_module(kind: &ModuleKind) -> Result<ModuleRep> {
    let n = kind.n();
    if n == 0 {
        return Err(domain("modules need n ≥ 1"));
    }
    match kind {
        ModuleKind::Simple(alpha) => {
            let set = alpha.to_subset();
            let gens = (1..n)
                .map(|i| {
                    if set.contains(&i) {
                        Action::Unit { dim: 1, cols: vec![None] }
                    } else {
                        Action::identity(1)
                    }
                })
                .collect();
            let basis = Basis::Labels(vec![format!("f[{alpha}]")]);
            ModuleRep::new(n, basis, gens, GenStyle::Pi)
        }
        ModuleKind::RibbonBar(shape) => {
            let tabs = enumerate_family(Family::Ribbon, &shape.clone().into(), None)?;
            tableau_rep(n, tabs, GenStyle::Pi)
        }
        ModuleKind::Ribbon(shape) => {
            let tabs = enumerate_family(Family::Ribbon, &shape.clone().into(), None)?;
            tableau_rep(n, tabs, GenStyle::PiBar)
        }
        ModuleKind::Immaculate(alpha) => {
            let tabs = enumerate_family(Family::Immaculate, &alpha.clone().into(), None)?;
            tableau_rep(n, tabs, GenStyle::Pi)
        }
        ModuleKind::Extended(alpha) => {
            let tabs = enumerate_family(Family::Extended, &alpha.clone().into(), None)?;
            tableau_rep(n, tabs, GenStyle::Pi)
        }
        ModuleKind::Permuted(alpha, sigma) => {
            let tabs = enumerate_family(
                Family::PermutedComposition,
                &alpha.clone().into(),
                Some(sigma),
            )?;
            let compatible = is_compatible(alpha, sigma)?;
            let mut rep = tableau_rep(n, tabs, GenStyle::Pi)?;
            rep.incompatible = !compatible;
            Ok(rep)
        }
        ModuleKind::PermutedYoung(alpha, sigma) => {
            let tabs =
                enumerate_family(Family::PermutedYoung, &alpha.clone().into(), Some(sigma))?;
            let compatible = spyct_compatible(alpha, sigma)?;
            let mut rep = tableau_rep(n, tabs, GenStyle::Pi)?;
            rep.incompatible = !compatible;
            Ok(rep)
        }
    }
}

/// Builds a module from tableaux and constructs a `ShapeArg` from the kind.
pub(crate) fn tableau_rep(n: u32, tabs: Vec<Tableau>, style: GenStyle) -> Result<ModuleRep> {
    let dim = tabs.len();
    let index: HashMap<Vec<u32>, usize> =
        tabs.iter().enumerate().map(|(i, t)| (t.entries().to_vec(), i)).collect();
    let mut gens = Vec::with_capacity(n as usize - 1);
    for i in 1..n {
        let mut cols: Vec<Option<(usize, i8)>> = Vec::with_capacity(dim);
        for t in &tabs {
            cols.push(generator_image(t, i, style, &index, &tabs)?);
        }
        gens.push(Action::Unit { dim, cols });
    }
    ModuleRep::new(n, Basis::Tableaux(tabs), gens, style)
}

/// The image of one basis tableau under generator `i`, per the family's
/// case split.
fn generator_image(
    t: &Tableau,
    i: u32,
    style: GenStyle,
    index: &HashMap<Vec<u32>, usize>,
    tabs: &[Tableau],
) -> Result<Option<(usize, i8)>> {
    let self_index = index[t.entries()];
    enum Move {
        Fix,
        Kill,
        Swap,
    }
    let action = match t.family {
        Family::Ribbon => {
            let (ri, _) = t.cell_of(i);
            let (rj, _) = t.cell_of(i + 1);
            if ri < rj {
                Move::Fix // i strictly above i+1
            } else if ri == rj {
                Move::Kill
            } else {
                Move::Swap
            }
        }
        Family::Immaculate => {
            let (ri, ci) = t.cell_of(i);
            let (rj, cj) = t.cell_of(i + 1);
            if ri >= rj {
                Move::Fix // i weakly below i+1
            } else if ci == 1 && cj == 1 {
                Move::Kill
            } else {
                Move::Swap
            }
        }
        Family::Extended => {
            let (_, ci) = t.cell_of(i);
            let (_, cj) = t.cell_of(i + 1);
            if ci < cj {
                Move::Fix // i strictly left of i+1
            } else if ci == cj {
                Move::Kill
            } else {
                Move::Swap
            }
        }
        Family::PermutedComposition | Family::PermutedYoung => {
            if !t.is_descent(i) {
                Move::Fix
            } else if t.attacking(i)? {
                Move::Kill
            } else {
                Move::Swap
            }
        }
    };
    Ok(match (action, style) {
        (Move::Fix, GenStyle::Pi) => Some((self_index, 1)),
        (Move::Fix, GenStyle::PiBar) => Some((self_index, -1)),
        (Move::Kill, _) => None,
        (Move::Swap, _) => {
            let swapped = t.swap_entries(i);
            let target = *index.get(&swapped).ok_or_else(|| {
                internal(format!(
                    "swap of {i} leaves the family: {} in {:?}",
                    t.short_string(),
                    tabs.first().map(|x| x.family)
                ))
            })?;
            Some((target, 1))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modules::rep::verify_relations;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn simple_module_action_pattern() {
        // set((2,1)) = {2}: the second generator kills, the first fixes.
        let rep = build_module(&ModuleKind::Simple(comp("2,1"))).unwrap();
        assert_eq!(rep.dim(), 1);
        assert!(rep.gen(1).same_map(&Action::identity(1)));
        assert!(rep.gen(2).same_map(&Action::Unit { dim: 1, cols: vec![None] }));
    }

    #[test]
    fn simple_modules_satisfy_relations_up_to_n8() {
        for n in 1..=8u32 {
            for alpha in crate::comb::compositions_of(n) {
                let rep = build_module(&ModuleKind::Simple(alpha)).unwrap();
                assert!(verify_relations(&rep).passed());
            }
        }
    }

    #[test]
    fn spct_figure_arrows() {
        let rep =
            build_module(&ModuleKind::Permuted(comp("2,2,1"), perm("132"))).unwrap();
        assert_eq!(rep.dim(), 3);
        let tabs = rep.basis().tableaux().unwrap();
        let find = |s: &str| tabs.iter().position(|t| t.short_string() == s).unwrap();
        let t1 = find("2.1/5.4/3");
        let t2 = find("2.1/5.3/4");
        let t3 = find("3.2/5.1/4");
        // First tableau: fixed by 1 and 4, killed by 2, sent to the second by 3.
        assert_eq!(rep.gen(1).column_image(t1), vec![(t1, crate::linalg::rat(1))]);
        assert_eq!(rep.gen(4).column_image(t1), vec![(t1, crate::linalg::rat(1))]);
        assert!(rep.gen(2).column_image(t1).is_empty());
        assert_eq!(rep.gen(3).column_image(t1), vec![(t2, crate::linalg::rat(1))]);
        // Isolated vertex: fixed by 2, killed by the rest.
        assert_eq!(rep.gen(2).column_image(t3), vec![(t3, crate::linalg::rat(1))]);
        for g in [1, 3, 4] {
            assert!(rep.gen(g).column_image(t3).is_empty());
        }
    }

    #[test]
    fn extended_figure_arrows() {
        let rep = build_module(&ModuleKind::Extended(comp("2,1,2"))).unwrap();
        assert_eq!(rep.dim(), 3);
        let tabs = rep.basis().tableaux().unwrap();
        let find = |s: &str| tabs.iter().position(|t| t.short_string() == s).unwrap();
        let top = find("4.5/3/1.2");
        // The generator chain of the worked example: loops at 1 and 4.
        assert_eq!(rep.gen(1).column_image(top), vec![(top, crate::linalg::rat(1))]);
        assert_eq!(rep.gen(4).column_image(top), vec![(top, crate::linalg::rat(1))]);
        assert_eq!(rep.gen(2).column_image(top), vec![(find("4.5/2/1.3"), crate::linalg::rat(1))]);
        assert!(rep.gen(3).column_image(top).is_empty());
    }

    #[test]
    fn incompatible_pair_yields_flagged_zero_module() {
        let rep = build_module(&ModuleKind::Permuted(comp("1,2"), perm("21"))).unwrap();
        assert_eq!(rep.dim(), 0);
        assert!(rep.incompatible);
    }

    #[test]
    fn kind_parsing_round_trip() {
        for s in ["pbar(1|2,1)", "p(2,1)", "v(1,2,2)", "x(2,1,2)", "s(2,2,1;132)", "shat(1,2,2;213)", "f(3,1)"] {
            let kind: ModuleKind = s.parse().unwrap();
            assert_eq!(kind.to_string(), s);
        }
        assert!("s(2,2,1)".parse::<ModuleKind>().is_err());
        assert!("v(2;12)".parse::<ModuleKind>().is_err());
    }
}
