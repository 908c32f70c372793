mod cech;
mod classify;
mod genus;
mod index;
mod selftest;
mod spinrep;

use crate::args::{Cli, Command};
use crate::report::Report;

pub fn run(cli: &Cli) -> anyhow::Result<Report> {
    match &cli.command {
        Command::Classify(a) => classify::run(a),
        Command::Spinrep(a) => spinrep::run(cli, a),
        Command::Genus(a) => genus::run(cli, a),
        Command::Cech(a) => cech::run(a),
        Command::Index(a) => index::run(cli, a),
        Command::Selftest(a) => selftest::run(cli, a),
    }
}
