use std::sync::OnceLock;

use super::divergent::{TypeIX, TypeVIII, TypeX};
use super::exponential::Modulated;
use super::{ExactSolution, SolutionType};
use crate::error::{Error, Result};

/// Solution families registered by name.
pub struct Registry {
    entries: Vec<Box<dyn ExactSolution>>,
}

impl Registry {
    fn standard() -> Self {
        let mut r = Registry { entries: Vec::new() };
        r.register(Box::new(TypeVIII));
        r.register(Box::new(TypeIX));
        r.register(Box::new(TypeX));
        for kind in [SolutionType::XI, SolutionType::XII, SolutionType::XIII, SolutionType::XIV] {
            r.register(Box::new(Modulated::new(kind)));
        }
        r
    }

    fn register(&mut self, s: Box<dyn ExactSolution>) {
        self.entries.retain(|e| e.tag() != s.tag());
        self.entries.push(s);
    }

    pub fn get(&self, tag: SolutionType) -> Result<&dyn ExactSolution> {
        self.entries
            .iter()
            .find(|e| e.tag() == tag)
            .map(|b| b.as_ref())
            .ok_or_else(|| Error::UnknownId(format!("no strategy registered for {tag}")))
    }

    pub fn by_name(&self, name: &str) -> Result<&dyn ExactSolution> {
        self.get(name.parse()?)
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.tag().name()).collect()
    }
}

pub fn registry() -> &'static Registry {
    static REGISTRY: OnceLock<Registry> = OnceLock::new();
    REGISTRY.get_or_init(Registry::standard)
}
