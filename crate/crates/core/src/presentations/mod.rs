//! Group presentations checked against exact permutation models.

mod shift;

pub use shift::ShiftPermutation;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("no image assigned to generator `{0}`")]
    UnassignedGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: String,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: &str) -> Self {
        Letter { generator: generator.to_string(), inverse: false }
    }

    pub fn inv(&self) -> Letter {
        Letter { generator: self.generator.clone(), inverse: !self.inverse }
    }
}

/// A freely reduced word in the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last().is_some_and(|last| last.generator == l.generator && last.inverse != l.inverse) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn generator(name: &str) -> Self {
        Word(vec![Letter::new(name)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.0.windows(2).all(|w| !(w[0].generator == w[1].generator && w[0].inverse != w[1].inverse))
    }

    pub fn times(&self, rhs: &Word) -> Word {
        Word::new(self.0.iter().chain(&rhs.0).cloned())
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(Letter::inv).collect())
    }

    pub fn power(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Word::default(), |acc, _| acc.times(&base))
    }

    /// `b a b^-1`.
    pub fn conjugate_by(&self, b: &Word) -> Word {
        b.times(self).times(&b.inverse())
    }

    /// `a b a^-1 b^-1`.
    pub fn commutator(&self, b: &Word) -> Word {
        self.times(b).times(&self.inverse()).times(&b.inverse())
    }

    /// Space-separated letters, inverses written with a `^-1` suffix.
    pub fn parse(text: &str) -> Word {
        Word::new(text.split_whitespace().map(|tok| match tok.strip_suffix("^-1") {
            Some(g) => Letter { generator: g.to_string(), inverse: true },
            None => Letter::new(tok),
        }))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.0.iter().map(|l| if l.inverse { format!("{}^-1", l.generator) } else { l.generator.clone() }).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, PresentationError> {
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(PresentationError::DuplicateGenerator(g.clone()));
            }
        }
        for r in &relators {
            if let Some(l) = r.letters().iter().find(|l| !generators.contains(&l.generator)) {
                return Err(PresentationError::UnknownGenerator(l.generator.clone()));
            }
        }
        Ok(Presentation { generators, relators })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// One relator per line.
    pub fn to_text(&self) -> String {
        self.relators.iter().map(|r| format!("{r}\n")).collect()
    }
}

/// Generator names of the braided Houghton presentation.
pub const SHIFT: &str = "t";
pub const TWIST: &str = "tau";

/// Generators `t`, `tau`; relators `tau tau^t tau (tau^t tau tau^t)^-1` and
/// `[tau, tau^(t^k)]` for `2 <= |k| <= n_max`, where `a^b = b a b^-1`.
pub fn brh2_presentation(n_max: u32) -> Presentation {
    assert!(n_max >= 2, "commutators start at distance 2");
    let t = Word::generator(SHIFT);
    let tau = Word::generator(TWIST);
    let tau_t = tau.conjugate_by(&t);
    let braid = tau.times(&tau_t).times(&tau).times(&tau_t.times(&tau).times(&tau_t).inverse());
    let mut relators = vec![braid];
    for k in 2..=n_max as i64 {
        for signed in [k, -k] {
            relators.push(tau.commutator(&tau.conjugate_by(&t.power(signed))));
        }
    }
    Presentation::new(vec![SHIFT.into(), TWIST.into()], relators).expect("generators are distinct")
}

pub type Assignment = BTreeMap<String, ShiftPermutation>;

/// `t -> (id, 1)`, `tau -> ((0 1), 0)`.
pub fn standard_assignment() -> Assignment {
    Assignment::from([
        (SHIFT.to_string(), ShiftPermutation::translation(1)),
        (TWIST.to_string(), ShiftPermutation::transposition(0, 1)),
    ])
}

/// Product of the letters' images, left to right.
pub fn evaluate_word(word: &Word, assignment: &Assignment) -> Result<ShiftPermutation, PresentationError> {
    word.letters().iter().try_fold(ShiftPermutation::identity(), |acc, l| {
        let image = assignment.get(&l.generator).ok_or_else(|| PresentationError::UnassignedGenerator(l.generator.clone()))?;
        Ok(acc.compose(&if l.inverse { image.inverse() } else { image.clone() }))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelatorCheck {
    pub relator: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelatorReport {
    pub checks: Vec<RelatorCheck>,
    pub all_hold: bool,
}

pub fn check_relators(p: &Presentation, assignment: &Assignment) -> Result<RelatorReport, PresentationError> {
    let checks = p
        .relators()
        .iter()
        .map(|r| Ok(RelatorCheck { relator: r.to_string(), holds: evaluate_word(r, assignment)?.is_identity() }))
        .collect::<Result<Vec<_>, PresentationError>>()?;
    let all_hold = checks.iter().all(|c| c.holds);
    Ok(RelatorReport { checks, all_hold })
}
