use crate::comb::{is_compatible, Composition, GeneralizedComposition, Perm};
use crate::error::{domain, unsupported};
use crate::tableaux::diagram::{Cell, Diagram};
use crate::tableaux::tableau::{Family, Tableau};
use crate::Result;

/// Shape argument for enumeration: generalized for ribbons, single otherwise.
#[derive(Debug, Clone)]
pub enum ShapeArg {
    Single(Composition),
    Generalized(GeneralizedComposition),
}

impl From<Composition> for ShapeArg {
    fn from(c: Composition) -> Self {
        ShapeArg::Single(c)
    }
}

impl From<GeneralizedComposition> for ShapeArg {
    fn from(g: GeneralizedComposition) -> Self {
        ShapeArg::Generalized(g)
    }
}

/// Enumerates the full family for a shape, in the canonical order
/// (lexicographic on the row-reading word). For the permuted families an
/// incompatible `(α, σ)` yields an empty list, not an error.
pub fn enumerate_family(
    family: Family,
    shape: &ShapeArg,
    type_perm: Option<&Perm>,
) -> Result<Vec<Tableau>> {
    let diagram = diagram_for(family, shape)?;
    match family {
        Family::PermutedComposition | Family::PermutedYoung => {
            let sigma = type_perm
                .ok_or_else(|| domain("permuted families need a type permutation"))?;
            let alpha = match shape {
                ShapeArg::Single(c) => c,
                ShapeArg::Generalized(_) => {
                    return Err(domain("permuted families take a plain composition shape"))
                }
            };
            if sigma.degree() != alpha.len() {
                return Err(domain(format!(
                    "type permutation degree {} does not match ℓ(α) = {}",
                    sigma.degree(),
                    alpha.len()
                )));
            }
            Ok(backtrack(family, &diagram, Some(sigma)))
        }
        _ => {
            if type_perm.is_some() {
                return Err(domain(format!(
                    "family {} does not take a type permutation",
                    family.cli_name()
                )));
            }
            Ok(backtrack(family, &diagram, None))
        }
    }
}

/// Builds the right diagram for a family/shape pair.
pub fn diagram_for(family: Family, shape: &ShapeArg) -> Result<Diagram> {
    match (family, shape) {
        (Family::Ribbon, ShapeArg::Single(c)) => Ok(Diagram::rd(c)),
        (Family::Ribbon, ShapeArg::Generalized(g)) => Ok(Diagram::rd_generalized(g)),
        (Family::Immaculate, ShapeArg::Single(c)) => Ok(Diagram::cd(c)),
        (Family::Extended, ShapeArg::Single(c)) => Ok(Diagram::rcd(c)),
        (Family::PermutedComposition, ShapeArg::Single(c)) => Ok(Diagram::cd(c)),
        (Family::PermutedYoung, ShapeArg::Single(c)) => Ok(Diagram::rcd(c)),
        (f, ShapeArg::Generalized(_)) => Err(domain(format!(
            "family {} takes a plain composition shape",
            f.cli_name()
        ))),
    }
}

/// Places entries `n, n-1, ..., 1` with per-family pruning, so only valid
/// standard fillings are ever completed.
fn backtrack(family: Family, diagram: &Diagram, sigma: Option<&Perm>) -> Vec<Tableau> {
    let state = Search {
        family,
        diagram,
        sigma_inv: sigma.map(Perm::inverse),
        sigma: sigma.cloned(),
        rows: diagram.row_count(),
        cols: diagram.col_count(),
        first_column: diagram.col_cells(1),
    };
    let mut grid: Vec<Option<u32>> = vec![None; state.rows * state.cols];
    let mut out = Vec::new();
    state.place(&mut grid, diagram.size() as u32, 0, &mut out);
    out.sort();
    out
}

struct Search<'a> {
    family: Family,
    diagram: &'a Diagram,
    sigma: Option<Perm>,
    sigma_inv: Option<Perm>,
    rows: usize,
    cols: usize,
    first_column: Vec<Cell>,
}

impl Search<'_> {
    fn slot(&self, r: usize, c: usize) -> usize {
        (r - 1) * self.cols + (c - 1)
    }

    fn in_diagram(&self, r: usize, c: usize) -> bool {
        r >= 1 && c >= 1 && r <= self.rows && c <= self.cols && self.diagram.contains((r, c))
    }

    /// The permuted families fill the first column in decreasing value order,
    /// so the row that must receive the next first-column entry is forced by σ.
    fn forced_first_col_row(&self, filled: usize) -> Option<usize> {
        let inv = self.sigma_inv.as_ref()?;
        let l = self.first_column.len();
        if filled >= l {
            return None;
        }
        let t = inv.image(l - filled);
        let cell = if self.family == Family::PermutedYoung {
            // Word position t counts from the bottom of the column.
            self.first_column[l - t]
        } else {
            self.first_column[t - 1]
        };
        Some(cell.0)
    }

    fn admissible(&self, grid: &[Option<u32>], (r, c): Cell, forced_row: Option<usize>) -> bool {
        let filled = |r: usize, c: usize| grid[self.slot(r, c)].is_some();
        match self.family {
            Family::Ribbon => {
                // Rows fill right to left, columns bottom to top.
                (!self.in_diagram(r, c + 1) || filled(r, c + 1))
                    && (!self.in_diagram(r + 1, c) || filled(r + 1, c))
            }
            Family::Immaculate => {
                if self.in_diagram(r, c + 1) && !filled(r, c + 1) {
                    return false;
                }
                // First column fills bottom to top.
                c != 1 || !self.in_diagram(r + 1, 1) || filled(r + 1, 1)
            }
            Family::Extended => {
                if self.in_diagram(r, c + 1) && !filled(r, c + 1) {
                    return false;
                }
                // Columns decrease downward, so each fills top to bottom; the
                // nearest occupied cell above suffices by induction.
                match self.diagram.col_cells(c).iter().rev().find(|&&(rr, _)| rr < r) {
                    Some(&(ar, ac)) => filled(ar, ac),
                    None => true,
                }
            }
            Family::PermutedComposition => {
                if c == 1 {
                    return forced_row == Some(r);
                }
                // Rows decrease left to right: fill left to right.
                if !filled(r, c - 1) {
                    return false;
                }
                // Partial triple condition: an occupied (i, c-1) with i < r
                // already dominates the entry being placed, so (i, c) must be
                // occupied too.
                for i in 1..r {
                    if self.in_diagram(i, c - 1)
                        && filled(i, c - 1)
                        && (!self.in_diagram(i, c) || !filled(i, c))
                    {
                        return false;
                    }
                }
                true
            }
            Family::PermutedYoung => {
                if c == 1 && forced_row != Some(r) {
                    return false;
                }
                // Rows increase left to right: fill right to left.
                if self.in_diagram(r, c + 1) && !filled(r, c + 1) {
                    return false;
                }
                // Partial Young triple condition against occupied (j, c+1), j > r.
                for j in r + 1..=self.rows {
                    if self.in_diagram(j, c + 1) {
                        if let Some(w) = grid[self.slot(j, c + 1)] {
                            if !self.in_diagram(r, c + 1) {
                                return false;
                            }
                            match grid[self.slot(r, c + 1)] {
                                Some(right) if right < w => {}
                                _ => return false,
                            }
                        }
                    }
                }
                true
            }
        }
    }

    fn place(
        &self,
        grid: &mut Vec<Option<u32>>,
        v: u32,
        first_col_filled: usize,
        out: &mut Vec<Tableau>,
    ) {
        if v == 0 {
            let entries: Vec<u32> = self
                .diagram
                .cells()
                .iter()
                .map(|&(r, c)| grid[self.slot(r, c)].unwrap())
                .collect();
            let t = Tableau::new(self.family, self.diagram.clone(), entries, self.sigma.clone())
                .expect("backtracking only completes valid fillings");
            out.push(t);
            return;
        }
        let forced_row = self.forced_first_col_row(first_col_filled);
        for &(r, c) in self.diagram.cells() {
            let slot = self.slot(r, c);
            if grid[slot].is_some() || !self.admissible(grid, (r, c), forced_row) {
                continue;
            }
            grid[slot] = Some(v);
            let delta = usize::from(c == 1);
            self.place(grid, v - 1, first_col_filled + delta, out);
            grid[slot] = None;
        }
    }
}

/// The distinguished generator filling for the three unpermuted families:
/// columns left to right for ribbons, rows top-down for immaculate, rows
/// bottom-up for extended.
pub fn superstandard(family: Family, shape: &ShapeArg) -> Result<Tableau> {
    let diagram = diagram_for(family, shape)?;
    let mut entries = vec![0u32; diagram.size()];
    let mut next = 1u32;
    match family {
        Family::Ribbon => {
            for c in 1..=diagram.col_count() {
                for cell in diagram.col_cells(c) {
                    entries[diagram.cell_index(cell).unwrap()] = next;
                    next += 1;
                }
            }
        }
        Family::Immaculate => {
            for r in 1..=diagram.row_count() {
                for cell in diagram.row_cells(r) {
                    entries[diagram.cell_index(cell).unwrap()] = next;
                    next += 1;
                }
            }
        }
        Family::Extended => {
            for r in (1..=diagram.row_count()).rev() {
                for cell in diagram.row_cells(r) {
                    entries[diagram.cell_index(cell).unwrap()] = next;
                    next += 1;
                }
            }
        }
        Family::PermutedComposition | Family::PermutedYoung => {
            return Err(unsupported(
                "permuted families have no superstandard filling; use the canonical source",
            ));
        }
    }
    Tableau::new(family, diagram, entries, None)
}

/// The canonical source tableau of shape `α` and type `σ`: row `σ^{-1}(i)`
/// holds the i-th consecutive block of entries, decreasing left to right.
pub fn canonical_source(alpha: &Composition, sigma: &Perm) -> Result<Tableau> {
    if !is_compatible(alpha, sigma)? {
        return Err(domain(format!("({alpha}; {sigma}) is not a compatible pair")));
    }
    let diagram = Diagram::cd(alpha);
    let inv = sigma.inverse();
    let mut entries = vec![0u32; diagram.size()];
    let mut low = 0u32;
    for i in 1..=alpha.len() {
        let row = inv.image(i);
        let width = alpha.part(row - 1);
        for (offset, cell) in diagram.row_cells(row).into_iter().enumerate() {
            entries[diagram.cell_index(cell).unwrap()] = low + width - offset as u32;
        }
        low += width;
    }
    let t = Tableau::new(Family::PermutedComposition, diagram, entries, Some(sigma.clone()))?;
    debug_assert!(t.is_source());
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn set_counts_from_worked_examples() {
        let t1 = enumerate_family(Family::Extended, &comp("2,1,2").into(), None).unwrap();
        assert_eq!(t1.len(), 3);
        let t2 = enumerate_family(Family::Extended, &comp("1,2,2").into(), None).unwrap();
        assert_eq!(t2.len(), 2);
    }

    #[test]
    fn spct_counts_and_incompatibility() {
        let t = enumerate_family(
            Family::PermutedComposition,
            &comp("2,2,1").into(),
            Some(&perm("132")),
        )
        .unwrap();
        assert_eq!(t.len(), 3);
        let empty = enumerate_family(
            Family::PermutedComposition,
            &comp("1,2").into(),
            Some(&perm("21")),
        )
        .unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn spct_figure_entries() {
        let t = enumerate_family(
            Family::PermutedComposition,
            &comp("2,2,1").into(),
            Some(&perm("132")),
        )
        .unwrap();
        let strings: Vec<String> = t.iter().map(Tableau::short_string).collect();
        assert!(strings.contains(&"2.1/5.4/3".to_string()));
        assert!(strings.contains(&"2.1/5.3/4".to_string()));
        assert!(strings.contains(&"3.2/5.1/4".to_string()));
    }

    #[test]
    fn spyct_figure_entries() {
        let t = enumerate_family(
            Family::PermutedYoung,
            &comp("1,2,2").into(),
            Some(&perm("213")),
        )
        .unwrap();
        let strings: Vec<String> = t.iter().map(Tableau::short_string).collect();
        assert_eq!(t.len(), 3);
        assert!(strings.contains(&"4.5/1.2/3".to_string()));
        assert!(strings.contains(&"4.5/1.3/2".to_string()));
        assert!(strings.contains(&"3.4/1.5/2".to_string()));
    }

    /// Differential test: the pruned backtracking agrees with filtering all
    /// n! fillings through the validity predicate.
    #[test]
    fn backtracking_matches_naive_filter() {
        fn naive(family: Family, shape: &ShapeArg, sigma: Option<&Perm>) -> Vec<Tableau> {
            let diagram = diagram_for(family, shape).unwrap();
            let n = diagram.size();
            let mut out = Vec::new();
            let mut perm: Vec<u32> = (1..=n as u32).collect();
            // Heap's algorithm over entry assignments.
            fn heap(
                k: usize,
                perm: &mut Vec<u32>,
                family: Family,
                diagram: &Diagram,
                sigma: Option<&Perm>,
                out: &mut Vec<Tableau>,
            ) {
                if k <= 1 {
                    if let Ok(t) = Tableau::new(
                        family,
                        diagram.clone(),
                        perm.clone(),
                        sigma.cloned(),
                    ) {
                        out.push(t);
                    }
                    return;
                }
                for i in 0..k {
                    heap(k - 1, perm, family, diagram, sigma, out);
                    if k % 2 == 0 {
                        perm.swap(i, k - 1);
                    } else {
                        perm.swap(0, k - 1);
                    }
                }
            }
            heap(n, &mut perm, family, &diagram, sigma, &mut out);
            out.sort();
            out.dedup();
            out
        }

        for n in 1..=5u32 {
            for alpha in crate::comb::compositions_of(n) {
                for (family, needs_sigma) in [
                    (Family::Ribbon, false),
                    (Family::Immaculate, false),
                    (Family::Extended, false),
                    (Family::PermutedComposition, true),
                    (Family::PermutedYoung, true),
                ] {
                    let shape: ShapeArg = alpha.clone().into();
                    if needs_sigma {
                        for sigma in Perm::all(alpha.len()) {
                            let fast =
                                enumerate_family(family, &shape, Some(&sigma)).unwrap();
                            let slow = naive(family, &shape, Some(&sigma));
                            assert_eq!(fast, slow, "{family:?} {alpha} {sigma}");
                        }
                    } else {
                        let fast = enumerate_family(family, &shape, None).unwrap();
                        let slow = naive(family, &shape, None);
                        assert_eq!(fast, slow, "{family:?} {alpha}");
                    }
                }
            }
        }
        // A couple of generalized ribbon shapes as well.
        for g in ["1|2,1", "2|1|1", "1,1|2"] {
            let shape: ShapeArg = g.parse::<GeneralizedComposition>().unwrap().into();
            let fast = enumerate_family(Family::Ribbon, &shape, None).unwrap();
            let slow = naive(Family::Ribbon, &shape, None);
            assert_eq!(fast, slow, "generalized {g}");
        }
    }

    #[test]
    fn spct_nonempty_iff_compatible() {
        for n in 1..=6u32 {
            for alpha in crate::comb::compositions_of(n) {
                for sigma in Perm::all(alpha.len()) {
                    let t = enumerate_family(
                        Family::PermutedComposition,
                        &alpha.clone().into(),
                        Some(&sigma),
                    )
                    .unwrap();
                    assert_eq!(
                        !t.is_empty(),
                        is_compatible(&alpha, &sigma).unwrap(),
                        "nonemptiness mismatch for ({alpha}; {sigma})"
                    );
                }
            }
        }
    }

    #[test]
    fn superstandard_examples() {
        let t0 = superstandard(Family::Immaculate, &comp("1,2,2").into()).unwrap();
        assert_eq!(t0.short_string(), "1/2.3/4.5");
        let sf = superstandard(Family::Extended, &comp("2,1,2").into()).unwrap();
        assert_eq!(sf.short_string(), "4.5/3/1.2");
        let g: GeneralizedComposition = "1|1,2,1,1,2,1".parse().unwrap();
        let srt = superstandard(Family::Ribbon, &ShapeArg::Generalized(g)).unwrap();
        assert_eq!(srt.short_string(), "-.-.-.8/-.-.4.9/-.-.5/-.-.6/-.2.7/-.3/1");
        assert!(superstandard(Family::PermutedComposition, &comp("2").into()).is_err());
    }

    #[test]
    fn canonical_source_examples() {
        let t = canonical_source(&comp("2,2,1"), &perm("231")).unwrap();
        assert_eq!(t.short_string(), "3.2/5.4/1");
        assert!(t.is_source());
        let row = canonical_source(&comp("4"), &perm("1")).unwrap();
        assert_eq!(row.short_string(), "4.3.2.1");
        assert!(canonical_source(&comp("1,2"), &perm("21")).is_err());
    }

    #[test]
    fn descent_sets_of_superstandard_ribbons() {
        // Des(T_0^(β)) is the subset of β's complement, for all β of size ≤ 6.
        for n in 1..=6u32 {
            for beta in crate::comb::compositions_of(n) {
                let t0 = superstandard(Family::Ribbon, &beta.clone().into()).unwrap();
                assert_eq!(
                    t0.descent_set(),
                    beta.complement().to_subset(),
                    "descents of the superstandard ribbon of {beta}"
                );
            }
        }
    }

    #[test]
    fn single_row_spct_has_no_descents() {
        let t = enumerate_family(
            Family::PermutedComposition,
            &comp("4").into(),
            Some(&perm("1")),
        )
        .unwrap();
        assert_eq!(t.len(), 1);
        assert!(t[0].descent_set().is_empty());
    }
}
