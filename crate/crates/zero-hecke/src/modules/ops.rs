use num_traits::Zero;

use crate::comb::{Composition, Perm};
use crate::error::{domain, unsupported};
use crate::linalg::{rat_zero, Rat, RatMatrix, Subspace};
use crate::modules::action::Action;
use crate::modules::build::{build_module, ModuleKind};
use crate::modules::rep::{Basis, GenStyle, ModuleRep};
use crate::tableaux::{class_partition, TableauClass};
use crate::Result;

/// Twist along the algebra automorphism sending generator `i` to `n-i`:
/// the twisted module's generator `i` is the original generator `n-i`.
pub fn phi_twist(rep: &ModuleRep) -> Result<ModuleRep> {
    if rep.style() != GenStyle::Pi {
        return Err(unsupported("twist is defined on idempotent-style generators; convert first"));
    }
    let mut gens: Vec<Action> = rep.gens().to_vec();
    gens.reverse();
    ModuleRep::new_unverified(rep.n(), rep.basis().clone(), gens, GenStyle::Pi)
}

/// Rewrites a shifted-generator module over the idempotent generators via
/// `π = π̄ + 1`. Idempotent-style input is returned unchanged.
pub fn to_pi_style(rep: &ModuleRep) -> Result<ModuleRep> {
    match rep.style() {
        GenStyle::Pi => Ok(rep.clone()),
        GenStyle::PiBar => {
            let gens = rep.gens().iter().map(|g| g.plus_scalar_identity(1)).collect();
            ModuleRep::new_unverified(rep.n(), rep.basis().clone(), gens, GenStyle::Pi)
        }
    }
}

/// Applies generator letters to a vector in the order given, so the word
/// `[i_1, ..., i_p]` acts as the operator product `g_{i_p} ∘ ⋯ ∘ g_{i_1}`.
pub fn act_word(rep: &ModuleRep, word: &[u32], v: &[Rat]) -> Result<Vec<Rat>> {
    if v.len() != rep.dim() {
        return Err(domain("vector length does not match module dimension"));
    }
    let mut cur = v.to_vec();
    for &i in word {
        if i == 0 || i >= rep.n() {
            return Err(domain(format!("generator index {i} outside [n-1]")));
        }
        cur = rep.gen(i).apply(&cur);
    }
    Ok(cur)
}

/// Restriction of a tableau module to one class of the standardized-column
/// word partition; the class spans an invariant subspace by construction.
pub fn class_summand(rep: &ModuleRep, class: &TableauClass) -> Result<ModuleRep> {
    let tabs = rep
        .basis()
        .tableaux()
        .ok_or_else(|| domain("class restriction needs a tableau basis"))?;
    let positions: Vec<usize> = class
        .tableaux
        .iter()
        .map(|t| {
            tabs.iter()
                .position(|x| x == t)
                .ok_or_else(|| domain("class member missing from module basis"))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut back = vec![usize::MAX; rep.dim()];
    for (local, &global) in positions.iter().enumerate() {
        back[global] = local;
    }
    let dim = positions.len();
    let mut gens = Vec::with_capacity(rep.gens().len());
    for g in rep.gens() {
        let mut cols = Vec::with_capacity(dim);
        for &global in &positions {
            let image = g.column_image(global);
            let col = match image.as_slice() {
                [] => None,
                [(target, value)] => {
                    let local = back[*target];
                    if local == usize::MAX {
                        return Err(domain("class span is not invariant under the action"));
                    }
                    let sign = if *value == crate::linalg::rat(1) { 1 } else { -1 };
                    Some((local, sign))
                }
                _ => return Err(domain("tableau generator has a non-unit column")),
            };
            cols.push(col);
        }
        gens.push(Action::Unit { dim, cols });
    }
    ModuleRep::new_unverified(rep.n(), Basis::Tableaux(class.tableaux.clone()), gens, rep.style())
}

/// Splits the permuted composition module into its class summands, each
/// cyclic over its source tableau.
pub fn decompose_spct(
    alpha: &Composition,
    sigma: &Perm,
) -> Result<Vec<(TableauClass, ModuleRep)>> {
    let rep = build_module(&ModuleKind::Permuted(alpha.clone(), sigma.clone()))?;
    let partition = class_partition(alpha, sigma)?;
    partition
        .classes
        .into_iter()
        .map(|class| {
            let summand = class_summand(&rep, &class)?;
            Ok((class, summand))
        })
        .collect()
}

/// Induced representations on an invariant subspace and on its quotient.
/// Fails if the subspace is not invariant under every generator.
pub fn sub_quotient(rep: &ModuleRep, space: &Subspace) -> Result<(ModuleRep, ModuleRep)> {
    if space.ambient_dim() != rep.dim() {
        return Err(domain("subspace ambient dimension does not match module"));
    }
    for (idx, g) in rep.gens().iter().enumerate() {
        for row in space.basis_rows() {
            if !space.contains_vector(&g.apply(row)) {
                return Err(domain(format!(
                    "subspace is not invariant under generator {}",
                    idx + 1
                )));
            }
        }
    }
    let k = space.dim();
    let rows = space.basis_rows();

    // Submodule: express g·b_j over the echelon basis rows; coordinates read
    // off at pivot columns during reduction.
    let mut sub_gens = Vec::with_capacity(rep.gens().len());
    for g in rep.gens() {
        let mut m = RatMatrix::zero(k, k);
        for (j, row) in rows.iter().enumerate() {
            let coords = coordinates_in_basis(space, &g.apply(row));
            for (i, c) in coords.into_iter().enumerate() {
                m[(i, j)] = c;
            }
        }
        sub_gens.push(Action::Dense(m));
    }
    let sub_basis = Basis::Labels((0..k).map(|i| format!("b{i}")).collect());
    let sub = ModuleRep::new_unverified(rep.n(), sub_basis, sub_gens, rep.style())?;

    // Quotient: coordinates on the non-pivot columns after reduction mod the
    // subspace.
    let pivots: Vec<usize> = {
        let mut p = Vec::new();
        for row in rows {
            p.push(row.iter().position(|x| !x.is_zero()).expect("echelon rows are nonzero"));
        }
        p
    };
    let free: Vec<usize> = (0..rep.dim()).filter(|c| !pivots.contains(c)).collect();
    let q = free.len();
    let mut quo_gens = Vec::with_capacity(rep.gens().len());
    for g in rep.gens() {
        let mut m = RatMatrix::zero(q, q);
        for (j, &col) in free.iter().enumerate() {
            let mut e = vec![rat_zero(); rep.dim()];
            e[col] = crate::linalg::rat_one();
            let reduced = space.reduce(&g.apply(&e));
            for (i, &fc) in free.iter().enumerate() {
                m[(i, j)] = reduced[fc].clone();
            }
            // Reduction clears every pivot column, so the residual is
            // supported on the free columns.
            debug_assert!(pivots.iter().all(|&pc| reduced[pc].is_zero()));
        }
        quo_gens.push(Action::Dense(m));
    }
    let quo_basis = Basis::Labels(free.iter().map(|c| format!("q{c}")).collect());
    let quo = ModuleRep::new_unverified(rep.n(), quo_basis, quo_gens, rep.style())?;
    Ok((sub, quo))
}

/// Coordinates of a member vector over the echelon basis rows.
fn coordinates_in_basis(space: &Subspace, v: &[Rat]) -> Vec<Rat> {
    let rows = space.basis_rows();
    let mut coords = vec![rat_zero(); rows.len()];
    let mut rem = v.to_vec();
    for (i, row) in rows.iter().enumerate() {
        let p = row.iter().position(|x| !x.is_zero()).expect("echelon rows are nonzero");
        if !rem[p].is_zero() {
            let c = rem[p].clone();
            for (x, b) in rem.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &c * b;
                }
            }
            coords[i] = c;
        }
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "vector not in subspace");
    coords
}

/// Block-diagonal direct sum of two modules over the same algebra.
pub fn direct_sum(a: &ModuleRep, b: &ModuleRep) -> Result<ModuleRep> {
    if a.n() != b.n() {
        return Err(domain("direct sum needs matching algebra rank"));
    }
    if a.style() != b.style() {
        return Err(domain("direct sum needs matching generator style"));
    }
    let da = a.dim();
    let gens = a
        .gens()
        .iter()
        .zip(b.gens())
        .map(|(ga, gb)| match (ga, gb) {
            (Action::Unit { cols: ca, .. }, Action::Unit { cols: cb, .. }) => {
                let mut cols: Vec<Option<(usize, i8)>> = ca.clone();
                cols.extend(cb.iter().map(|c| c.map(|(i, s)| (i + da, s))));
                Action::Unit { dim: da + b.dim(), cols }
            }
            _ => {
                let ma = ga.to_matrix();
                let mb = gb.to_matrix();
                let mut m = RatMatrix::zero(da + b.dim(), da + b.dim());
                for i in 0..da {
                    for j in 0..da {
                        m[(i, j)] = ma[(i, j)].clone();
                    }
                }
                for i in 0..b.dim() {
                    for j in 0..b.dim() {
                        m[(da + i, da + j)] = mb[(i, j)].clone();
                    }
                }
                Action::Dense(m)
            }
        })
        .collect();
    let mut labels = Vec::with_capacity(da + b.dim());
    for i in 0..da {
        labels.push(format!("l:{}", a.basis().label(i)));
    }
    for i in 0..b.dim() {
        labels.push(format!("r:{}", b.basis().label(i)));
    }
    ModuleRep::new_unverified(a.n(), Basis::Labels(labels), gens, a.style())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::operator_closure_with;
    use crate::modules::rep::verify_relations;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn twist_is_involutive() {
        let rep = build_module(&ModuleKind::Extended(comp("2,1,2"))).unwrap();
        let twice = phi_twist(&phi_twist(&rep).unwrap()).unwrap();
        for (a, b) in rep.gens().iter().zip(twice.gens()) {
            assert!(a.same_map(b));
        }
    }

    #[test]
    fn twist_of_simple_matches_reversed_label() {
        for n in 1..=6u32 {
            for alpha in crate::comb::compositions_of(n) {
                let twisted =
                    phi_twist(&build_module(&ModuleKind::Simple(alpha.clone())).unwrap()).unwrap();
                let reversed = build_module(&ModuleKind::Simple(alpha.reverse())).unwrap();
                for (a, b) in twisted.gens().iter().zip(reversed.gens()) {
                    assert!(a.same_map(b), "twist of simple {alpha}");
                }
            }
        }
    }

    #[test]
    fn twist_rejects_shifted_style() {
        let rep = build_module(&ModuleKind::Ribbon("2,1".parse().unwrap())).unwrap();
        assert!(phi_twist(&rep).is_err());
        assert!(phi_twist(&to_pi_style(&rep).unwrap()).is_ok());
    }

    #[test]
    fn act_word_empty_is_identity() {
        let rep = build_module(&ModuleKind::Immaculate(comp("1,2"))).unwrap();
        let v: Vec<Rat> = (0..rep.dim()).map(|i| crate::linalg::rat(i as i64 + 1)).collect();
        assert_eq!(act_word(&rep, &[], &v).unwrap(), v);
    }

    #[test]
    fn act_word_well_defined_on_reduced_words() {
        // Two reduced words of the longest element of S_3 agree on V(1,2).
        let rep = build_module(&ModuleKind::Immaculate(comp("1,2"))).unwrap();
        for j in 0..rep.dim() {
            let mut e = vec![rat_zero(); rep.dim()];
            e[j] = crate::linalg::rat(1);
            let a = act_word(&rep, &[1, 2, 1], &e).unwrap();
            let b = act_word(&rep, &[2, 1, 2], &e).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn decompose_figure_instance() {
        let parts = decompose_spct(&comp("2,2,1"), &perm("132")).unwrap();
        let mut dims: Vec<usize> = parts.iter().map(|(_, m)| m.dim()).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 2]);
        for (_, summand) in &parts {
            assert!(verify_relations(summand).passed());
        }
    }

    #[test]
    fn summands_are_cyclic_over_their_source() {
        // The closure of each source tableau under the generators is its
        // whole class span.
        for (alpha, sigma) in [("2,2,1", "132"), ("2,2,1", "231"), ("3,4,2", "231")] {
            let alpha = comp(alpha);
            let sigma = perm(sigma);
            if alpha.size() > 6 {
                continue;
            }
            for (class, summand) in decompose_spct(&alpha, &sigma).unwrap() {
                let mut seed = vec![rat_zero(); summand.dim()];
                seed[class.source_index] = crate::linalg::rat(1);
                let seed_space =
                    crate::linalg::Subspace::from_vectors(summand.dim(), vec![seed]);
                let ops: Vec<&Action> = summand.gens().iter().collect();
                let closure = operator_closure_with(&seed_space, &ops);
                assert_eq!(closure.dim(), summand.dim(), "cyclic generation fails");
            }
        }
    }

    #[test]
    fn sub_quotient_trivial_cases() {
        let rep = build_module(&ModuleKind::Extended(comp("1,2,2"))).unwrap();
        let zero = Subspace::zero(rep.dim());
        let (sub, quo) = sub_quotient(&rep, &zero).unwrap();
        assert_eq!(sub.dim(), 0);
        assert_eq!(quo.dim(), rep.dim());
        for (g, h) in quo.gens().iter().zip(rep.gens()) {
            assert!(g.same_map(h));
        }
        let full = Subspace::full(rep.dim());
        let (sub, quo) = sub_quotient(&rep, &full).unwrap();
        assert_eq!(sub.dim(), rep.dim());
        assert_eq!(quo.dim(), 0);
        assert!(verify_relations(&sub).passed());
    }

    #[test]
    fn sub_quotient_rejects_non_invariant() {
        let rep = build_module(&ModuleKind::Permuted(comp("2,2,1"), perm("132"))).unwrap();
        // Single basis tableau that the action moves: not invariant.
        let tabs = rep.basis().tableaux().unwrap();
        let moving = tabs.iter().position(|t| t.short_string() == "2.1/5.4/3").unwrap();
        let span = Subspace::from_coordinate_set(rep.dim(), &[moving]);
        assert!(sub_quotient(&rep, &span).is_err());
    }

    #[test]
    fn direct_sum_dims_and_relations() {
        let a = build_module(&ModuleKind::Simple(comp("2,1"))).unwrap();
        let b = build_module(&ModuleKind::Simple(comp("1,2"))).unwrap();
        let s = direct_sum(&a, &b).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(verify_relations(&s).passed());
    }
}
