//! Process-wide symbol table.
//!
//! Symbols are interned once and never removed. The reserved names `q`, `h`,
//! `mu1..mu8` and `nu1..nu8` are registered first, in that order, so that the
//! storage order agrees with the canonical order for every reserved name.
//! Symbols registered later are placed after the reserved block and compared
//! by name when printing, which keeps output independent of registration
//! order across threads.

use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};

const MAX_RESERVED_INDEX: usize = 8;

/// Handle to an interned symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(pub(crate) u8);

struct Registry {
    names: Vec<String>,
}

fn registry() -> &'static RwLock<Registry> {
    static REG: OnceLock<RwLock<Registry>> = OnceLock::new();
    REG.get_or_init(|| {
        let mut names = vec!["q".to_string(), "h".to_string()];
        for i in 1..=MAX_RESERVED_INDEX {
            names.push(format!("mu{i}"));
        }
        for i in 1..=MAX_RESERVED_INDEX {
            names.push(format!("nu{i}"));
        }
        RwLock::new(Registry { names })
    })
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

/// The global, append-only symbol table.
pub struct SymbolTable;

impl SymbolTable {
    /// Interns `name`, returning its handle.
    pub fn symbol(name: &str) -> Result<Symbol> {
        if !valid_name(name) {
            return Err(Error::Parse(format!("invalid symbol name `{name}`")));
        }
        {
            let reg = registry().read().unwrap();
            if let Some(i) = reg.names.iter().position(|n| n == name) {
                return Ok(Symbol(i as u8));
            }
        }
        let mut reg = registry().write().unwrap();
        if let Some(i) = reg.names.iter().position(|n| n == name) {
            return Ok(Symbol(i as u8));
        }
        if reg.names.len() >= u8::MAX as usize {
            return Err(Error::ResourceLimit("symbol table is full".into()));
        }
        reg.names.push(name.to_string());
        Ok(Symbol((reg.names.len() - 1) as u8))
    }

    pub fn name(sym: Symbol) -> String {
        registry().read().unwrap().names[sym.0 as usize].clone()
    }

    pub fn len() -> usize {
        registry().read().unwrap().names.len()
    }

    /// Sort key used for canonical printing.
    pub(crate) fn canonical_key(index: usize) -> (usize, String) {
        let reserved = 2 + 2 * MAX_RESERVED_INDEX;
        if index < reserved {
            (index, String::new())
        } else {
            (reserved, registry().read().unwrap().names[index].clone())
        }
    }
}

impl Symbol {
    pub fn q() -> Symbol {
        Symbol(0)
    }

    pub fn h() -> Symbol {
        Symbol(1)
    }

    /// `mu{i}` for 1-based `i`.
    pub fn mu(i: usize) -> Symbol {
        if (1..=MAX_RESERVED_INDEX).contains(&i) {
            Symbol((1 + i) as u8)
        } else {
            SymbolTable::symbol(&format!("mu{i}")).expect("valid name")
        }
    }

    /// `nu{j}` for 1-based `j`.
    pub fn nu(j: usize) -> Symbol {
        if (1..=MAX_RESERVED_INDEX).contains(&j) {
            Symbol((1 + MAX_RESERVED_INDEX + j) as u8)
        } else {
            SymbolTable::symbol(&format!("nu{j}")).expect("valid name")
        }
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn name(self) -> String {
        SymbolTable::name(self)
    }
}

impl std::fmt::Display for Symbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reserved_layout() {
        assert_eq!(Symbol::q().name(), "q");
        assert_eq!(Symbol::h().name(), "h");
        assert_eq!(Symbol::mu(3).name(), "mu3");
        assert_eq!(Symbol::nu(2).name(), "nu2");
        assert_eq!(SymbolTable::symbol("mu1").unwrap(), Symbol::mu(1));
    }

    #[test]
    fn rejects_bad_names() {
        assert!(SymbolTable::symbol("Q").is_err());
        assert!(SymbolTable::symbol("1x").is_err());
        assert!(SymbolTable::symbol("").is_err());
        assert!(SymbolTable::symbol("x_1").is_ok());
    }
}
