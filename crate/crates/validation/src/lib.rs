//! Holds the `acceptance` integration test. It is a separate package so a
//! failing criterion does not stop cargo from running the other test targets.
