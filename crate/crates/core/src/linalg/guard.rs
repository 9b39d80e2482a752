//! Allocation guard shared by the dense and sparse code paths.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

/// Default cap on scalar entries held by a single structure.
pub const DEFAULT_ENTRY_CAP: usize = 800_000_000;

static ENTRY_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_ENTRY_CAP);

pub fn entry_cap() -> usize {
    ENTRY_CAP.load(Ordering::Relaxed)
}

/// Changes the cap for the whole process.
pub fn set_entry_cap(cap: usize) {
    ENTRY_CAP.store(cap, Ordering::Relaxed);
}

pub fn check_entries(entries: usize) -> Result<()> {
    let cap = entry_cap();
    if entries > cap {
        return Err(Error::ResourceLimit(format!(
            "{entries} entries requested, cap is {cap}"
        )));
    }
    Ok(())
}
