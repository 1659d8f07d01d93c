use crate::comb::{Composition, GeneralizedComposition};

/// A box position: 1-indexed `(row, col)` with row 1 at the top.
pub type Cell = (usize, usize);

/// Which diagram construction produced the cell set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagramKind {
    /// Left-justified, i-th row from the top has `α_i` boxes.
    Cd,
    /// Left-justified, i-th row from the bottom has `α_i` boxes.
    Rcd,
    /// Ribbon: i-th row from the bottom has `α_i` boxes, consecutive rows
    /// overlap in exactly one column.
    Rd,
    /// Disjoint ribbons, each block strictly northeast of the previous.
    GeneralizedRd,
}

/// Shape parameter of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Shape {
    Single(Composition),
    Generalized(GeneralizedComposition),
}

impl Shape {
    pub fn size(&self) -> u32 {
        match self {
            Shape::Single(c) => c.size(),
            Shape::Generalized(g) => g.size(),
        }
    }

    pub fn as_single(&self) -> Option<&Composition> {
        match self {
            Shape::Single(c) => Some(c),
            Shape::Generalized(_) => None,
        }
    }
}

impl std::fmt::Display for Shape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Shape::Single(c) => write!(f, "{c}"),
            Shape::Generalized(g) => write!(f, "{g}"),
        }
    }
}

/// A finite set of boxes with a fixed coordinate convention (row 1 = top).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    pub kind: DiagramKind,
    pub shape: Shape,
    /// Sorted row-major (row, then column).
    cells: Vec<Cell>,
}

impl Diagram {
    /// Composition diagram `cd(α)`.
    pub fn cd(alpha: &Composition) -> Diagram {
        let mut cells = Vec::with_capacity(alpha.size() as usize);
        for (i, &p) in alpha.parts().iter().enumerate() {
            for c in 1..=p as usize {
                cells.push((i + 1, c));
            }
        }
        Diagram { kind: DiagramKind::Cd, shape: Shape::Single(alpha.clone()), cells }
    }

    /// Reverse composition diagram `rcd(α)`: display row `r` (from the top)
    /// has `α_{ℓ+1-r}` boxes.
    pub fn rcd(alpha: &Composition) -> Diagram {
        let l = alpha.len();
        let mut cells = Vec::with_capacity(alpha.size() as usize);
        for r in 1..=l {
            let width = alpha.part(l - r) as usize;
            for c in 1..=width {
                cells.push((r, c));
            }
        }
        Diagram { kind: DiagramKind::Rcd, shape: Shape::Single(alpha.clone()), cells }
    }

    /// Ribbon diagram `rd(α)`: rows from the bottom, consecutive rows sharing
    /// exactly one column, no 2x2 block.
    pub fn rd(alpha: &Composition) -> Diagram {
        let cells = ribbon_cells(alpha, 0, 0);
        Diagram { kind: DiagramKind::Rd, shape: Shape::Single(alpha.clone()), cells }
    }

    /// Generalized ribbon diagram: block ribbons stacked strictly northeast.
    pub fn rd_generalized(shape: &GeneralizedComposition) -> Diagram {
        let blocks = shape.blocks();
        let heights: Vec<usize> = blocks.iter().map(Composition::len).collect();
        let widths: Vec<usize> =
            blocks.iter().map(|b| b.size() as usize - b.len() + 1).collect();
        let total_rows: usize = heights.iter().sum();
        let mut cells = Vec::with_capacity(shape.size() as usize);
        let mut row_below = total_rows; // block ribbons end at this display row
        let mut col_offset = 0;
        for (b, block) in blocks.iter().enumerate() {
            let top_row = row_below - heights[b];
            cells.extend(ribbon_cells(block, top_row, col_offset));
            row_below = top_row;
            col_offset += widths[b];
        }
        cells.sort_unstable();
        Diagram {
            kind: DiagramKind::GeneralizedRd,
            shape: Shape::Generalized(shape.clone()),
            cells,
        }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.binary_search(&cell).is_ok()
    }

    pub fn row_count(&self) -> usize {
        self.cells.iter().map(|&(r, _)| r).max().unwrap_or(0)
    }

    pub fn col_count(&self) -> usize {
        self.cells.iter().map(|&(_, c)| c).max().unwrap_or(0)
    }

    /// Cells of display row `r`, sorted by column.
    pub fn row_cells(&self, r: usize) -> Vec<Cell> {
        self.cells.iter().copied().filter(|&(rr, _)| rr == r).collect()
    }

    /// Cells of column `c`, sorted top to bottom.
    pub fn col_cells(&self, c: usize) -> Vec<Cell> {
        self.cells.iter().copied().filter(|&(_, cc)| cc == c).collect()
    }

    /// Index of a cell in the sorted row-major cell list.
    pub fn cell_index(&self, cell: Cell) -> Option<usize> {
        self.cells.binary_search(&cell).ok()
    }
}

/// Cells of `rd(α)` shifted by `(row_offset, col_offset)`. Row `i` from the
/// bottom starts at the column where row `i-1` ended.
fn ribbon_cells(alpha: &Composition, row_offset: usize, col_offset: usize) -> Vec<Cell> {
    let l = alpha.len();
    let mut cells = Vec::with_capacity(alpha.size() as usize);
    let mut start_col = 1;
    for (i, &p) in alpha.parts().iter().enumerate() {
        // Row i+1 from the bottom = display row l - i.
        let display_row = row_offset + l - i;
        for c in start_col..start_col + p as usize {
            cells.push((display_row, col_offset + c));
        }
        start_col += p as usize - 1;
    }
    cells.sort_unstable();
    cells
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn cd_rcd_shapes() {
        let d = Diagram::cd(&comp("3,1,2"));
        assert_eq!(d.cells(), &[(1, 1), (1, 2), (1, 3), (2, 1), (3, 1), (3, 2)]);
        let r = Diagram::rcd(&comp("3,1,2"));
        assert_eq!(r.cells(), &[(1, 1), (1, 2), (2, 1), (3, 1), (3, 2), (3, 3)]);
    }

    #[test]
    fn ribbon_shape_3_1_2() {
        // Bottom row columns 1-3, middle row column 3, top row columns 3-4.
        let d = Diagram::rd(&comp("3,1,2"));
        assert_eq!(d.cells(), &[(1, 3), (1, 4), (2, 3), (3, 1), (3, 2), (3, 3)]);
        assert!(d.contains((2, 3)));
        assert!(!d.contains((2, 2)));
    }

    #[test]
    fn ribbon_column_heights_are_transpose_data() {
        // Columns of rd(α^c) from the left have heights α_1, ..., α_ℓ.
        for n in 1..=7u32 {
            for alpha in crate::comb::compositions_of(n) {
                let d = Diagram::rd(&alpha.complement());
                let heights: Vec<u32> =
                    (1..=d.col_count()).map(|c| d.col_cells(c).len() as u32).collect();
                assert_eq!(heights, alpha.parts(), "column heights for {alpha}");
            }
        }
    }

    #[test]
    fn generalized_ribbon_two_blocks() {
        // (2,1) ⊕ (2): lower-left ribbon of shape (2,1), upper-right row of 2.
        let g: GeneralizedComposition = "2,1|2".parse().unwrap();
        let d = Diagram::rd_generalized(&g);
        assert_eq!(d.cells(), &[(1, 3), (1, 4), (2, 2), (3, 1), (3, 2)]);
    }

    #[test]
    fn generalized_ribbon_paper_cover_shape() {
        // (1) ⊕ (1,2,1,1,2,1) has column heights 1,2,4,2 matching its strips.
        let g: GeneralizedComposition = "1|1,2,1,1,2,1".parse().unwrap();
        let d = Diagram::rd_generalized(&g);
        assert_eq!(d.size(), 9);
        let heights: Vec<usize> = (1..=d.col_count()).map(|c| d.col_cells(c).len()).collect();
        assert_eq!(heights, vec![1, 2, 4, 2]);
        // Block 1 is the single bottom-left box.
        assert!(d.contains((7, 1)));
    }
}
