//! Diagrams, the five standard tableau families, enumeration with pruning,
//! descent/attacking statistics, and the class partition of the permuted
//! composition family.

mod classes;
mod diagram;
mod enumerate;
mod tableau;

pub use classes::{class_partition, st_word_string, std_column_word, ClassPartition, TableauClass};
pub use diagram::{Cell, Diagram, DiagramKind, Shape};
pub use enumerate::{canonical_source, diagram_for, enumerate_family, superstandard, ShapeArg};
pub use tableau::{first_column_standardization, standardize, Family, Tableau};
