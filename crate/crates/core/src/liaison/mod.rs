//! Biliaison of codimension-2 subschemes through modules with sections.

pub mod descent;
pub mod equiv;
pub mod feasibility;
pub mod meet;
pub mod random;
pub mod sections;
pub mod step;

pub use random::{degree_basis, random_combination, random_form};
pub use sections::{
    build_extraverti, n_type_resolution, quotient_by, section_matrix, Extraverti, NTypeResolution, SectionSequence,
};
pub use step::{basic_double_link, basic_double_link_with, elementary_biliaison_rank2, rao_shift, verify_rao_shift, BiliaisonStep, Certificate};
pub use feasibility::{general_section_quotient, section_quotient_feasible, FeasibilityReport};
pub use descent::{descend_to_minimal, descending_step, DescentLog, MoveAttempt};
pub use meet::{dissocie_kernel, kernel_generators, psi_meet, split_free_summands, FreeSplitting, Meet, Surjection};
pub use equiv::{connect_minimal, find_isomorphism, random_hom, same_biliaison_class, shared_sequences, ClassDecision};
