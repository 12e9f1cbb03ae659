mod bigon;
mod counts;
mod polynomial;
mod qtorus;

use skein_core::quantum_torus::Triangulation;

use crate::runner::Check;

/// Parameters shared by every suite. Each suite reads only the ones it needs.
#[derive(Clone, Debug)]
pub struct Params {
    pub n: u32,
    pub trials: usize,
    pub max_exp: u32,
    pub kmax: usize,
    pub triangulations: Vec<(String, Triangulation)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Bigon,
    Qtorus,
    TorusSkein,
    Chebyshev,
    Counts,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Bigon => "bigon",
            Suite::Qtorus => "qtorus",
            Suite::TorusSkein => "torus-skein",
            Suite::Chebyshev => "chebyshev",
            Suite::Counts => "counts",
        }
    }

    pub fn checks(self, p: &Params) -> Vec<Check> {
        match self {
            Suite::Bigon => bigon::checks(p),
            Suite::Qtorus => qtorus::checks(p),
            Suite::TorusSkein => polynomial::torus_skein_checks(p),
            Suite::Chebyshev => polynomial::chebyshev_checks(p),
            Suite::Counts => counts::checks(p),
        }
    }
}
