//! Correlation sets of exclusivity graphs: the classical (`STAB`), quantum
//! (theta body) and single-copy exclusivity (`QSTAB`) sets, their support
//! numbers α, ϑ and α*, and the anti-blocking relations between an
//! experiment and its complement.

pub mod bitset;
pub mod clique;
pub mod graph;
pub mod rational;
pub mod linprog;
pub mod corner;
pub mod sdp;
pub mod ep;
