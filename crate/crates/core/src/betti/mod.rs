//! Graded Betti numbers: the Koszul oracle, the splitting recursion for
//! complete graphs, closed forms, socle degrees and parallelization bounds.

pub mod field;
pub mod formula;
pub mod oracle;
pub mod parallel;
pub mod recursion;
pub mod table;

pub use field::FieldSpec;
pub use formula::{
    closed_form_k2, closed_form_k3, formula_table, k4_theorem_table, min_socle_degree,
};
pub use oracle::{
    betti_oracle, betti_oracle_across_fields, betti_oracle_with_work_cap, complete_degree_cap,
    default_degree_cap, hilbert_identity_holds, hilbert_numerator, DEFAULT_WORK_CAP,
};
pub use parallel::{parallel_bound_report, BoundRow, ParallelBoundReport};
pub use recursion::{ek_combine, recursive_betti_complete, RecursiveBetti};
pub use table::{BettiTable, Convention};
