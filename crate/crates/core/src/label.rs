//! String labels for the pieces of a diagram.
//!
//! Labels are user-facing names (`c1`, `v2`, `a7`, `R3`, `e2`). They are kept
//! verbatim from the source that defined them; all internal bookkeeping is
//! index-based.

use alloc::string::String;
use alloc::{format, vec::Vec};
use core::fmt;

macro_rules! label_type {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(pub String);

        impl $name {
            pub fn new(s: impl Into<String>) -> Self {
                Self(s.into())
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}({})", stringify!($name), self.0)
            }
        }

        impl From<&str> for $name {
            fn from(s: &str) -> Self {
                Self(String::from(s))
            }
        }

        impl From<String> for $name {
            fn from(s: String) -> Self {
                Self(s)
            }
        }
    };
}

label_type!(
    /// Name of a crossing site, `c1` in catalog sources.
    CrossingLabel
);
label_type!(
    /// Name of a trivalent vertex site.
    VertexLabel
);
label_type!(
    /// Name of an arc (a maximal strand segment between two site slots).
    ArcLabel
);
label_type!(
    /// Name of a region (face), `R1`..`Rf` unless pinned by the source.
    RegionLabel
);
label_type!(
    /// Name of an underlying graph edge recovered by edge tracing.
    EdgeLabel
);

/// Order labels with numeric suffixes the way people read them: `R2` before
/// `R10`. Labels with equal stems compare by suffix value; everything else
/// falls back to plain string order.
pub fn natural_cmp(a: &str, b: &str) -> core::cmp::Ordering {
    fn split(s: &str) -> (&str, Option<u64>) {
        let digits = s.len() - s.bytes().rev().take_while(u8::is_ascii_digit).count();
        match s[digits..].parse() {
            Ok(n) if digits < s.len() => (&s[..digits], Some(n)),
            _ => (s, None),
        }
    }
    let (sa, na) = split(a);
    let (sb, nb) = split(b);
    if sa == sb {
        match (na, nb) {
            (Some(x), Some(y)) => x.cmp(&y),
            (None, Some(_)) => core::cmp::Ordering::Less,
            (Some(_), None) => core::cmp::Ordering::Greater,
            (None, None) => core::cmp::Ordering::Equal,
        }
    } else {
        a.cmp(b)
    }
}

/// First `{prefix}{k}` (k = 1, 2, ...) not present in `taken`.
pub fn fresh_label(prefix: &str, taken: &[&str]) -> String {
    let mut k = 1usize;
    loop {
        let cand = format!("{prefix}{k}");
        if !taken.iter().any(|t| *t == cand) {
            return cand;
        }
        k += 1;
    }
}

/// Numbered labels `R1`..`Rn` skipping anything in `taken`.
pub fn fresh_labels(prefix: &str, count: usize, taken: &[&str]) -> Vec<String> {
    let mut out = Vec::with_capacity(count);
    let mut k = 1usize;
    while out.len() < count {
        let cand = format!("{prefix}{k}");
        if !taken.iter().any(|t| *t == cand) && !out.contains(&cand) {
            out.push(cand);
        }
        k += 1;
    }
    out
}
