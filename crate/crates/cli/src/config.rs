use reltak::{PrimeField, ProfileOptions};

use crate::args::{Cli, Command, FaultArg};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Perturbs the quotient term of the long exact sequence check.
    Ses,
}

#[derive(Debug)]
pub struct RunConfig {
    pub field: PrimeField,
    pub max_t: u32,
    pub gen_cap: usize,
    pub seed: u64,
    pub json: bool,
    pub parallel: Option<usize>,
    pub profile: ProfileOptions,
    pub fault: Option<Fault>,
    pub command: Command,
}

impl TryFrom<Cli> for RunConfig {
    type Error = CliError;

    fn try_from(cli: Cli) -> Result<Self, CliError> {
        let field = PrimeField::new(cli.characteristic)?;
        if cli.max_t < 1 {
            return Err(CliError::Usage("--max-t must be at least 1".into()));
        }
        if cli.parallel == Some(0) {
            return Err(CliError::Usage("--parallel must be at least 1".into()));
        }
        Ok(RunConfig {
            field,
            max_t: cli.max_t,
            gen_cap: cli.gen_cap,
            seed: cli.seed,
            json: cli.json,
            parallel: cli.parallel,
            profile: ProfileOptions {
                reisner_crosscheck: !cli.no_crosscheck,
                certify_frontier: !cli.no_crosscheck,
            },
            fault: cli.inject_fault.map(|f| match f {
                FaultArg::Ses => Fault::Ses,
            }),
            command: cli.command,
        })
    }
}
