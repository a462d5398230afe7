//! Exact one-point amplitudes of the resolved conifold with an outer brane
//! in arbitrary framing, a Fock-space oracle for them, Ooguri–Vafa
//! invariants and mirror-curve checks.

pub mod amplitudes;
pub mod exactnum;
pub mod fock;
pub mod mirror;
pub mod ovinv;
pub mod partitions;

pub use amplitudes::{
    closed_string_logz, genus0_onepoint, genus_expand, onepoint_closed, onepoint_oracle, onepoint_partition_sum,
    GenusSeries, OnePointAmplitude, Provenance,
};
pub use exactnum::{
    lambda_expand, qbinomial, qbracket, qfactorial, ExactError, GaussianRational, LaurentU, QPoly, Rational,
    RationalFunctionU, Ring, SeriesError, TruncatedSeries, Var,
};
pub use fock::{correlator_closed, correlator_reduce, oracle_onepoint, EWord, FockError, FockVector};
pub use mirror::{
    framed_curve_check, framing_transform_check, lagrange_z0, quantum_classical_limit, quantum_mirror_series,
    y_from_amplitude, zero_framing_curve_check, CurveCheck, MirrorError, MirrorSeries,
};
pub use ovinv::{
    disc_d, disc_d_framed, disc_e, ov_n, seq_catalan, seq_dmm, DiscInvariant, OVPolynomial, OvError,
};
pub use partitions::{character_table, partitions_of, set_cache_dir, CharacterTable, Partition, PartitionError};
