use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::comb::{Composition, Perm};
use crate::error::{domain, unsupported};
use crate::tableaux::diagram::{Cell, Diagram, DiagramKind};
use crate::Result;

/// The five standard tableau families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Standard ribbon tableaux: rows increase left to right, columns
    /// increase top to bottom, on a (generalized) ribbon diagram.
    Ribbon,
    /// Standard immaculate tableaux: rows increase, first column increases
    /// top to bottom, on `cd(α)`.
    Immaculate,
    /// Standard extended tableaux: rows increase, columns decrease top to
    /// bottom, on `rcd(α)`.
    Extended,
    /// Standard permuted composition tableaux of a type `σ`, on `cd(α)`.
    PermutedComposition,
    /// Standard permuted Young composition tableaux of a type `σ`, on `rcd(α)`.
    PermutedYoung,
}

impl Family {
    pub fn cli_name(self) -> &'static str {
        match self {
            Family::Ribbon => "srt",
            Family::Immaculate => "sit",
            Family::Extended => "set",
            Family::PermutedComposition => "spct",
            Family::PermutedYoung => "spyct",
        }
    }

    pub fn from_cli_name(name: &str) -> Result<Family> {
        match name {
            "srt" => Ok(Family::Ribbon),
            "sit" => Ok(Family::Immaculate),
            "set" => Ok(Family::Extended),
            "spct" => Ok(Family::PermutedComposition),
            "spyct" => Ok(Family::PermutedYoung),
            other => Err(domain(format!("unknown tableau family {other:?}"))),
        }
    }

    pub fn needs_type(self) -> bool {
        matches!(self, Family::PermutedComposition | Family::PermutedYoung)
    }
}

/// A standard filling of a diagram by `1..n`, tagged with its family and,
/// for the permuted families, its type permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    pub family: Family,
    pub diagram: Diagram,
    /// Entry at diagram.cells()[i].
    entries: Vec<u32>,
    pub type_perm: Option<Perm>,
}

impl Tableau {
    pub fn new(
        family: Family,
        diagram: Diagram,
        entries: Vec<u32>,
        type_perm: Option<Perm>,
    ) -> Result<Tableau> {
        if entries.len() != diagram.size() {
            return Err(domain("entry count does not match diagram size"));
        }
        let n = entries.len() as u32;
        let mut seen = vec![false; n as usize];
        for &e in &entries {
            if e == 0 || e > n || seen[e as usize - 1] {
                return Err(domain("entries must be a bijection onto 1..n"));
            }
            seen[e as usize - 1] = true;
        }
        if family.needs_type() != type_perm.is_some() {
            return Err(domain("type permutation present iff family is permuted"));
        }
        let t = Tableau { family, diagram, entries, type_perm };
        if !t.is_valid() {
            return Err(domain(format!("filling violates the {} predicate", family.cli_name())));
        }
        Ok(t)
    }

    /// Builds from rows of entries (top to bottom, left to right within the
    /// row's cells). Convenient for tests quoting worked examples.
    pub fn from_rows(
        family: Family,
        diagram: Diagram,
        rows: &[&[u32]],
        type_perm: Option<Perm>,
    ) -> Result<Tableau> {
        let mut entries = vec![0; diagram.size()];
        let mut supplied = 0;
        for (r, row) in rows.iter().enumerate() {
            let cells = diagram.row_cells(r + 1);
            if cells.len() != row.len() {
                return Err(domain(format!("row {} has {} cells, got {}", r + 1, cells.len(), row.len())));
            }
            for (cell, &e) in cells.iter().zip(row.iter()) {
                entries[diagram.cell_index(*cell).unwrap()] = e;
                supplied += 1;
            }
        }
        if supplied != diagram.size() {
            return Err(domain("row data does not cover the diagram"));
        }
        Tableau::new(family, diagram, entries, type_perm)
    }

    pub fn n(&self) -> u32 {
        self.entries.len() as u32
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn entry_at(&self, cell: Cell) -> Option<u32> {
        self.diagram.cell_index(cell).map(|i| self.entries[i])
    }

    /// Cell of entry `e` (1-indexed entry).
    pub fn cell_of(&self, e: u32) -> Cell {
        let idx = self.entries.iter().position(|&x| x == e).expect("entry present");
        self.diagram.cells()[idx]
    }

    /// Swaps the entries `i` and `i+1`, returning the raw entry vector.
    pub fn swap_entries(&self, i: u32) -> Vec<u32> {
        self.entries
            .iter()
            .map(|&e| {
                if e == i {
                    i + 1
                } else if e == i + 1 {
                    i
                } else {
                    e
                }
            })
            .collect()
    }

    /// Row-reading word: rows top to bottom, each row left to right. This is
    /// the canonical order key for enumerations and bases.
    pub fn reading_word(&self) -> Vec<u32> {
        self.entries.clone()
    }

    /// Reading from the bottom row up, left to right within each row; the
    /// order preserved by the ribbon-merging bijection.
    pub fn bottom_up_reading_word(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.entries.len());
        for r in (1..=self.diagram.row_count()).rev() {
            for cell in self.diagram.row_cells(r) {
                out.push(self.entry_at(cell).unwrap());
            }
        }
        out
    }

    /// Validity predicate of the tagged family; used as an oracle in tests
    /// and as a belt-and-braces check at construction.
    pub fn is_valid(&self) -> bool {
        let d = &self.diagram;
        let entry = |cell: Cell| self.entry_at(cell);
        match self.family {
            Family::Ribbon => {
                rows_increase(self) && columns_increase(self)
            }
            Family::Immaculate => {
                if d.kind != DiagramKind::Cd {
                    return false;
                }
                let first_col = d.col_cells(1);
                let col_ok = first_col
                    .windows(2)
                    .all(|w| entry(w[0]).unwrap() < entry(w[1]).unwrap());
                rows_increase(self) && col_ok
            }
            Family::Extended => {
                if d.kind != DiagramKind::Rcd {
                    return false;
                }
                let cols_ok = (1..=d.col_count()).all(|c| {
                    d.col_cells(c)
                        .windows(2)
                        .all(|w| entry(w[0]).unwrap() > entry(w[1]).unwrap())
                });
                rows_increase(self) && cols_ok
            }
            Family::PermutedComposition => {
                if d.kind != DiagramKind::Cd {
                    return false;
                }
                let sigma = self.type_perm.as_ref().expect("type required");
                if first_column_standardization(self, false) != *sigma {
                    return false;
                }
                // Rows strictly decrease left to right.
                let rows_ok = (1..=d.row_count()).all(|r| {
                    d.row_cells(r)
                        .windows(2)
                        .all(|w| entry(w[0]).unwrap() > entry(w[1]).unwrap())
                });
                rows_ok && triple_condition_holds(self)
            }
            Family::PermutedYoung => {
                if d.kind != DiagramKind::Rcd {
                    return false;
                }
                let sigma = self.type_perm.as_ref().expect("type required");
                if first_column_standardization(self, true) != *sigma {
                    return false;
                }
                rows_increase(self) && young_triple_condition_holds(self)
            }
        }
    }

    /// Per-family descent set: exactly the letters whose generator does not
    /// fix the tableau under the module action.
    pub fn descent_set(&self) -> Vec<u32> {
        (1..self.n()).filter(|&i| self.is_descent(i)).collect()
    }

    pub fn is_descent(&self, i: u32) -> bool {
        let (ri, ci) = self.cell_of(i);
        let (rj, cj) = self.cell_of(i + 1);
        match self.family {
            // i+1 strictly right of i.
            Family::Ribbon => cj > ci,
            // i strictly above i+1.
            Family::Immaculate => ri < rj,
            // i weakly right of i+1.
            Family::Extended => ci >= cj,
            // i+1 weakly right of i.
            Family::PermutedComposition => cj >= ci,
            // i+1 weakly left of i.
            Family::PermutedYoung => cj <= ci,
        }
    }

    /// The composition `comp(Des(t))` of `n`.
    pub fn descent_composition(&self) -> Composition {
        Composition::from_subset(&self.descent_set(), self.n()).expect("descents lie in [n-1]")
    }

    /// Whether entries `i` and `i+1` attack, for the permuted families.
    pub fn attacking(&self, i: u32) -> Result<bool> {
        if i == 0 || i >= self.n() {
            return Err(domain(format!("attacking index {i} outside [n-1]")));
        }
        let a = self.cell_of(i);
        let b = self.cell_of(i + 1);
        self.attacking_cells(a, b)
    }

    /// Attack relation on a pair of occupied cells: `a` holds the smaller of
    /// the two entries being compared.
    pub fn attacking_cells(&self, a: Cell, b: Cell) -> Result<bool> {
        match self.family {
            Family::PermutedComposition => {
                // Same column, or adjacent columns with the larger entry lower-right.
                Ok(a.1 == b.1 || (b.1 == a.1 + 1 && b.0 > a.0))
            }
            Family::PermutedYoung => {
                // Same column, or adjacent columns with the larger entry upper-left.
                Ok(a.1 == b.1 || (b.1 + 1 == a.1 && b.0 < a.0))
            }
            other => Err(unsupported(format!(
                "attacking pairs are defined for spct/spyct, not {}",
                other.cli_name()
            ))),
        }
    }

    /// Source tableaux generate their class: every non-descent `i < n` has
    /// `i+1` immediately to its left.
    pub fn is_source(&self) -> bool {
        debug_assert_eq!(self.family, Family::PermutedComposition);
        (1..self.n()).all(|i| {
            if self.is_descent(i) {
                true
            } else {
                let (r, c) = self.cell_of(i);
                c >= 2 && self.entry_at((r, c - 1)) == Some(i + 1)
            }
        })
    }

    /// Rows as JSON-ready vectors: each row runs from column 1 to its last
    /// occupied column, `None` for absent boxes.
    pub fn rows_with_gaps(&self) -> Vec<Vec<Option<u32>>> {
        (1..=self.diagram.row_count())
            .map(|r| {
                let cells = self.diagram.row_cells(r);
                let last = cells.last().map_or(0, |&(_, c)| c);
                (1..=last).map(|c| self.entry_at((r, c))).collect()
            })
            .collect()
    }

    /// Compact text form: rows joined by `/`, entries by `.`, absent boxes as `-`.
    pub fn short_string(&self) -> String {
        self.rows_with_gaps()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.map_or("-".to_string(), |v| v.to_string()))
                    .collect::<Vec<_>>()
                    .join(".")
            })
            .collect::<Vec<_>>()
            .join("/")
    }
}

fn rows_increase(t: &Tableau) -> bool {
    let d = &t.diagram;
    (1..=d.row_count()).all(|r| {
        d.row_cells(r)
            .windows(2)
            .all(|w| t.entry_at(w[0]).unwrap() < t.entry_at(w[1]).unwrap())
    })
}

fn columns_increase(t: &Tableau) -> bool {
    let d = &t.diagram;
    (1..=d.col_count()).all(|c| {
        d.col_cells(c)
            .windows(2)
            .all(|w| t.entry_at(w[0]).unwrap() < t.entry_at(w[1]).unwrap())
    })
}

/// Standardization of the first-column word, read top to bottom (or bottom
/// to top for the Young convention).
pub fn first_column_standardization(t: &Tableau, bottom_up: bool) -> Perm {
    let mut cells = t.diagram.col_cells(1);
    if bottom_up {
        cells.reverse();
    }
    let word: Vec<u32> = cells.iter().map(|&c| t.entry_at(c).unwrap()).collect();
    standardize(&word)
}

/// The permutation with the same relative order as `word`.
pub fn standardize(word: &[u32]) -> Perm {
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by_key(|&i| word[i]);
    let mut images = vec![0usize; word.len()];
    for (rank, &i) in order.iter().enumerate() {
        images[i] = rank + 1;
    }
    Perm::new(images).expect("standardization is a permutation")
}

/// Triple condition: `i<j`, `τ_{i,k} > τ_{j,k+1}` forces `(i,k+1)` present
/// with `τ_{i,k+1} > τ_{j,k+1}`.
fn triple_condition_holds(t: &Tableau) -> bool {
    let d = &t.diagram;
    for &(j, k1) in d.cells() {
        if k1 < 2 {
            continue;
        }
        let k = k1 - 1;
        let lower = t.entry_at((j, k1)).unwrap();
        for i in 1..j {
            let Some(left) = t.entry_at((i, k)) else { continue };
            if left > lower {
                match t.entry_at((i, k1)) {
                    Some(right) if right > lower => {}
                    _ => return false,
                }
            }
        }
    }
    true
}

/// Young triple condition: `i<j`, `τ_{i,k} < τ_{j,k+1}` forces `(i,k+1)`
/// present with `τ_{i,k+1} < τ_{j,k+1}`.
fn young_triple_condition_holds(t: &Tableau) -> bool {
    let d = &t.diagram;
    for &(j, k1) in d.cells() {
        if k1 < 2 {
            continue;
        }
        let k = k1 - 1;
        let lower = t.entry_at((j, k1)).unwrap();
        for i in 1..j {
            let Some(left) = t.entry_at((i, k)) else { continue };
            if left < lower {
                match t.entry_at((i, k1)) {
                    Some(right) if right < lower => {}
                    _ => return false,
                }
            }
        }
    }
    true
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.short_string())
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Tableau", 4)?;
        s.serialize_field("shape", &self.diagram.shape.to_string())?;
        s.serialize_field("family", self.family.cli_name())?;
        match &self.type_perm {
            Some(p) => s.serialize_field("sigma", &p.to_string())?,
            None => s.serialize_field("sigma", &Option::<String>::None)?,
        }
        s.serialize_field("rows", &self.rows_with_gaps())?;
        s.end()
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tableau {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.reading_word().cmp(&other.reading_word())
    }
}
