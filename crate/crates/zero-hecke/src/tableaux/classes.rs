use crate::comb::{is_compatible, Composition, Perm};
use crate::error::internal;
use crate::tableaux::enumerate::{canonical_source, enumerate_family};
use crate::tableaux::tableau::{standardize, Family, Tableau};
use crate::Result;

/// Standardized column word of a permuted composition tableau: the
/// standardization of each column read top to bottom, column by column.
pub fn std_column_word(t: &Tableau) -> Vec<Vec<usize>> {
    debug_assert_eq!(t.family, Family::PermutedComposition);
    (1..=t.diagram.col_count())
        .map(|c| {
            let word: Vec<u32> =
                t.diagram.col_cells(c).iter().map(|&cell| t.entry_at(cell).unwrap()).collect();
            standardize(&word).images().to_vec()
        })
        .collect()
}

/// Text key for a standardized column word, e.g. `132|12`.
pub fn st_word_string(word: &[Vec<usize>]) -> String {
    word.iter()
        .map(|col| col.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(""))
        .collect::<Vec<_>>()
        .join("|")
}

/// One equivalence class of the standardized-column-word relation.
#[derive(Debug, Clone)]
pub struct TableauClass {
    /// Members in the canonical order.
    pub tableaux: Vec<Tableau>,
    pub st_word: Vec<Vec<usize>>,
    /// Index into `tableaux` of the unique source tableau.
    pub source_index: usize,
    /// Whether this class contains the canonical source tableau.
    pub canonical: bool,
}

impl TableauClass {
    pub fn source(&self) -> &Tableau {
        &self.tableaux[self.source_index]
    }

    pub fn st_word_string(&self) -> String {
        st_word_string(&self.st_word)
    }
}

/// The partition of a permuted-composition family into classes, each with
/// its unique source tableau, the canonical class flagged.
#[derive(Debug, Clone)]
pub struct ClassPartition {
    pub alpha: Composition,
    pub sigma: Perm,
    /// Classes in increasing st-word order.
    pub classes: Vec<TableauClass>,
}

impl ClassPartition {
    pub fn total_size(&self) -> usize {
        self.classes.iter().map(|c| c.tableaux.len()).sum()
    }

    pub fn canonical_class(&self) -> Option<&TableauClass> {
        self.classes.iter().find(|c| c.canonical)
    }

    pub fn canonical_index(&self) -> Option<usize> {
        self.classes.iter().position(|c| c.canonical)
    }

    /// Class containing a given member, by st-word lookup.
    pub fn class_of(&self, t: &Tableau) -> Option<usize> {
        let key = std_column_word(t);
        self.classes.iter().position(|c| c.st_word == key)
    }
}

/// Partitions `SPCT^σ(α)` into standardized-column-word classes. For an
/// incompatible pair the partition is empty.
pub fn class_partition(alpha: &Composition, sigma: &Perm) -> Result<ClassPartition> {
    let all = enumerate_family(Family::PermutedComposition, &alpha.clone().into(), Some(sigma))?;
    let mut grouped: std::collections::BTreeMap<Vec<Vec<usize>>, Vec<Tableau>> =
        std::collections::BTreeMap::new();
    for t in all {
        grouped.entry(std_column_word(&t)).or_default().push(t);
    }
    let canonical = if grouped.is_empty() || !is_compatible(alpha, sigma)? {
        None
    } else {
        Some(canonical_source(alpha, sigma)?)
    };
    let mut classes = Vec::with_capacity(grouped.len());
    for (st_word, tableaux) in grouped {
        let sources: Vec<usize> = tableaux
            .iter()
            .enumerate()
            .filter(|(_, t)| t.is_source())
            .map(|(i, _)| i)
            .collect();
        if sources.len() != 1 {
            return Err(internal(format!(
                "class {} of ({alpha}; {sigma}) has {} source tableaux",
                st_word_string(&st_word),
                sources.len()
            )));
        }
        let is_canonical = canonical
            .as_ref()
            .map(|c| tableaux.iter().any(|t| t == c))
            .unwrap_or(false);
        classes.push(TableauClass {
            tableaux,
            st_word,
            source_index: sources[0],
            canonical: is_canonical,
        });
    }
    Ok(ClassPartition { alpha: alpha.clone(), sigma: sigma.clone(), classes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comb::compositions_of;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn figure_classes_for_132() {
        // The worked figure shows a two-element chain plus an isolated vertex.
        let p = class_partition(&comp("2,2,1"), &perm("132")).unwrap();
        assert_eq!(p.total_size(), 3);
        let mut sizes: Vec<usize> = p.classes.iter().map(|c| c.tableaux.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2]);
        let canonical = p.canonical_class().unwrap();
        assert_eq!(canonical.tableaux.len(), 2);
        assert_eq!(canonical.source().short_string(), "2.1/5.4/3");
    }

    #[test]
    fn class_with_two_sources_example_instance() {
        // SPCT^{231}((2,2,1)) contains the class whose source is 4.3/5.2/1.
        let p = class_partition(&comp("2,2,1"), &perm("231")).unwrap();
        let found = p
            .classes
            .iter()
            .any(|c| c.source().short_string() == "4.3/5.2/1");
        assert!(found, "expected source tableau 4.3/5.2/1");
    }

    #[test]
    fn classes_partition_the_family() {
        for n in 1..=6u32 {
            for alpha in compositions_of(n) {
                for sigma in Perm::all(alpha.len()) {
                    if !is_compatible(&alpha, &sigma).unwrap() {
                        continue;
                    }
                    let all = enumerate_family(
                        Family::PermutedComposition,
                        &alpha.clone().into(),
                        Some(&sigma),
                    )
                    .unwrap();
                    let p = class_partition(&alpha, &sigma).unwrap();
                    assert_eq!(p.total_size(), all.len(), "partition size for ({alpha}; {sigma})");
                    assert!(p.canonical_class().is_some(), "canonical class for ({alpha}; {sigma})");
                }
            }
        }
    }

    #[test]
    fn canonical_source_lands_in_canonical_class() {
        for n in 1..=6u32 {
            for alpha in compositions_of(n) {
                for sigma in Perm::all(alpha.len()) {
                    if !is_compatible(&alpha, &sigma).unwrap() {
                        continue;
                    }
                    let p = class_partition(&alpha, &sigma).unwrap();
                    let tau = canonical_source(&alpha, &sigma).unwrap();
                    let idx = p.class_of(&tau).unwrap();
                    assert!(p.classes[idx].canonical);
                    assert_eq!(p.classes[idx].source(), &tau);
                }
            }
        }
    }

    /// Only the standardized column words are class invariants; the raw
    /// column multisets are not. Witness: shape (2,1), type 21, where
    /// 3.1/2 and 3.2/1 are joined by the first generator yet their first
    /// columns are {2,3} and {1,3}.
    #[test]
    fn column_multisets_can_differ_within_a_class() {
        let p = class_partition(&comp("2,1"), &perm("21")).unwrap();
        let class = p
            .classes
            .iter()
            .find(|c| c.tableaux.len() == 2)
            .expect("the type-21 family has a two-element class");
        let col1 = |t: &Tableau| -> Vec<u32> {
            let mut v: Vec<u32> = t
                .diagram
                .col_cells(1)
                .iter()
                .map(|&cell| t.entry_at(cell).unwrap())
                .collect();
            v.sort_unstable();
            v
        };
        assert_ne!(col1(&class.tableaux[0]), col1(&class.tableaux[1]));
        assert_eq!(
            std_column_word(&class.tableaux[0]),
            std_column_word(&class.tableaux[1])
        );
    }

    #[test]
    fn attacking_cell_pattern_invariant_in_class() {
        for n in 1..=5u32 {
            for alpha in compositions_of(n) {
                for sigma in Perm::all(alpha.len()) {
                    let p = match class_partition(&alpha, &sigma) {
                        Ok(p) => p,
                        Err(_) => continue,
                    };
                    for class in &p.classes {
                        let pattern = |t: &Tableau| -> Vec<bool> {
                            let cells = t.diagram.cells();
                            let mut out = Vec::new();
                            for (ai, &a) in cells.iter().enumerate() {
                                for &b in &cells[ai + 1..] {
                                    // Orient so the smaller entry comes first.
                                    let (lo, hi) = if t.entry_at(a) < t.entry_at(b) {
                                        (a, b)
                                    } else {
                                        (b, a)
                                    };
                                    out.push(t.attacking_cells(lo, hi).unwrap());
                                }
                            }
                            out
                        };
                        let reference = pattern(class.source());
                        for t in &class.tableaux {
                            assert_eq!(pattern(t), reference, "attack pattern in class of {alpha}");
                        }
                    }
                }
            }
        }
    }
}
