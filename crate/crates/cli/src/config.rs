//! Serializable description of one run.

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use std::path::PathBuf;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
#[value(rename_all = "kebab-case")]
pub enum Suite {
    Structure,
    Divisibility,
    GenfunA,
    GenfunB,
    Residues,
    Fence,
    All,
}

impl Suite {
    pub fn members(self) -> Vec<Suite> {
        use Suite::*;
        match self {
            All => vec![Structure, Divisibility, GenfunA, GenfunB, Residues, Fence],
            s => vec![s],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Structure => "structure",
            Suite::Divisibility => "divisibility",
            Suite::GenfunA => "genfun-a",
            Suite::GenfunB => "genfun-b",
            Suite::Residues => "residues",
            Suite::Fence => "fence",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
#[value(rename_all = "kebab-case")]
pub enum FormArg {
    Natural,
    General,
    ImaginaryA,
    Suleimanov,
    NegativeA,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Command {
    Coeffs {
        n: usize,
        format: Format,
    },
    Verify {
        suite: Suite,
        n: Option<usize>,
        depth: Option<usize>,
    },
    Eval {
        a: String,
        b: String,
        tau: String,
    },
    Compare {
        a: String,
        b: String,
        t1: f64,
        t2: f64,
        samples: usize,
        form: FormArg,
        format: Format,
    },
}

/// Everything that determines the output of a run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    #[serde(flatten)]
    pub command: Command,
    pub tol: Option<f64>,
    pub out: Option<PathBuf>,
}
