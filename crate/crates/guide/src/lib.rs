//! Doc-test harness for the book.
//!
//! Each chapter of the book (under `book/src/`) is included here as a
//! module's documentation, so `cargo test` compiles and runs every code
//! snippet the book shows. A chapter edit that breaks a snippet breaks the
//! build, keeping prose and library in lockstep.
// Chapters cross-link with relative `.md` hrefs that only resolve inside
// the rendered book, not in rustdoc.
#![allow(rustdoc::broken_intra_doc_links, rustdoc::bare_urls)]

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/d-invariants.md")]
pub mod d_invariants {}

#[doc = include_str!("../../../book/src/obstruction.md")]
pub mod obstruction {}

#[doc = include_str!("../../../book/src/enumeration.md")]
pub mod enumeration {}

#[doc = include_str!("../../../book/src/census.md")]
pub mod census {}

#[doc = include_str!("../../../book/src/hfk.md")]
pub mod hfk {}

#[doc = include_str!("../../../book/src/fibered.md")]
pub mod fibered {}

#[doc = include_str!("../../../book/src/plumbing.md")]
pub mod plumbing {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
