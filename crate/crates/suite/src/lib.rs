//! Holds the acceptance test target; run it with `cargo test -p rla-suite --test acceptance`.
