//! Acceptance criteria for `slice-fock`; see `tests/acceptance.rs`.
