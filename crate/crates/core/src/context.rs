use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ambient variable alphabet: `r` mutable variables `u_1..u_r` followed by
/// `l` frozen variables `p_1..p_l`. Fixed at construction; every polynomial
/// carries a handle to its alphabet and operations insist the alphabets agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
    rank: usize,
}

/// Shared alphabet handle.
pub type Ctx = Arc<Alphabet>;

impl Alphabet {
    /// Default names `u1..ur, p1..pl`.
    pub fn new(rank: usize, frozen: usize) -> Ctx {
        let mut names = Vec::with_capacity(rank + frozen);
        for i in 1..=rank {
            names.push(format!("u{i}"));
        }
        for j in 1..=frozen {
            names.push(format!("p{j}"));
        }
        Arc::new(Alphabet { names, rank })
    }

    pub fn with_names(mutable: &[&str], frozen: &[&str]) -> Ctx {
        let names = mutable
            .iter()
            .chain(frozen.iter())
            .map(|s| s.to_string())
            .collect();
        Arc::new(Alphabet {
            names,
            rank: mutable.len(),
        })
    }

    pub fn from_name_vec(names: Vec<String>, rank: usize) -> Result<Ctx> {
        if rank > names.len() {
            return Err(Error::Input(format!(
                "rank {rank} exceeds variable count {}",
                names.len()
            )));
        }
        Ok(Arc::new(Alphabet { names, rank }))
    }

    /// Number of mutable variables.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of frozen variables.
    pub fn frozen(&self) -> usize {
        self.names.len() - self.rank
    }

    /// Total alphabet size `r + l`.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn frozen_names(&self) -> &[String] {
        &self.names[self.rank..]
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}; {})",
            self.names[..self.rank].join(","),
            self.names[self.rank..].join(",")
        )
    }
}

pub(crate) fn check_same_ctx(a: &Ctx, b: &Ctx) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::ContextMismatch(format!("{a} vs {b}")))
    }
}
