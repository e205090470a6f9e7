//! Enumeration caps.
//!
//! Every exhaustive enumeration in this crate grows exponentially in the
//! number of entries `m`, so each family of operations refuses inputs above a
//! documented cap. The environment variable `CHAINTOPE_MAX_M`, when set to a
//! positive integer, replaces all three caps at once.

use std::sync::OnceLock;

/// Default cap for short-code and genericity enumeration (2^(m-1) subsets;
/// meet-in-the-middle takes over for genericity above 20 entries).
pub const DEFAULT_CODE_MAX_M: usize = 24;

/// Default cap for face-poset, vertex, and flag enumeration (3^(m-1) signed
/// subsets).
pub const DEFAULT_STRUCTURAL_MAX_M: usize = 12;

/// Default cap for cyclic-partition enumeration.
pub const DEFAULT_PANINA_MAX_M: usize = 9;

fn env_override() -> Option<usize> {
    static OVERRIDE: OnceLock<Option<usize>> = OnceLock::new();
    *OVERRIDE.get_or_init(|| {
        std::env::var("CHAINTOPE_MAX_M")
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .filter(|&v| v >= 3)
    })
}

pub fn code_max_m() -> usize {
    env_override().unwrap_or(DEFAULT_CODE_MAX_M)
}

pub fn structural_max_m() -> usize {
    env_override().unwrap_or(DEFAULT_STRUCTURAL_MAX_M)
}

pub fn panina_max_m() -> usize {
    env_override().unwrap_or(DEFAULT_PANINA_MAX_M)
}

pub(crate) fn check(m: usize, cap: usize) -> crate::error::Result<()> {
    if m > cap {
        Err(crate::error::Error::SizeCap { m, cap })
    } else {
        Ok(())
    }
}
