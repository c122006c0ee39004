use std::io;

use clap::Subcommand;
use qident_core::partitions::{count_gollnitz_a, count_gollnitz_b, count_table, decompose_chains, enumerate_distinct};
use qident_core::weights::partition_weight;

#[derive(Subcommand)]
pub enum Explore {
    /// Each distinct partition of n, its chains and its weight.
    Weights {
        #[arg(long)]
        n: u32,
    },
    /// A(N) and B(N) of Gollnitz's theorem for N <= max-n.
    Gollnitz {
        #[arg(long, default_value_t = 20)]
        max_n: u32,
    },
    /// The distinct partitions of n.
    Partitions {
        #[arg(long)]
        n: u32,
        /// Largest allowed part.
        #[arg(long)]
        max_part: Option<u32>,
    },
    /// G_L(N;i,j,k) and P_L(N;i,j,k) side by side.
    Counts {
        #[arg(long, default_value_t = 10)]
        max_n: u32,
        #[arg(long, default_value_t = 2)]
        max_ijk: u32,
        /// Part bound L; unbounded when absent.
        #[arg(long = "L")]
        bound: Option<u32>,
    },
}

pub fn run(what: Explore) -> io::Result<()> {
    let mut out = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(io::stdout().lock());
    match what {
        Explore::Weights { n } => {
            out.write_record(["partition", "chains", "weight"])?;
            for p in enumerate_distinct(n, None) {
                let chains: Vec<String> = decompose_chains(&p).iter().map(ToString::to_string).collect();
                out.write_record([p.to_string(), chains.join(" "), partition_weight(&p).to_string()])?;
            }
        }
        Explore::Gollnitz { max_n } => {
            out.write_record(["N", "A", "B"])?;
            for n in 0..=max_n {
                out.write_record([n.to_string(), count_gollnitz_a(n).to_string(), count_gollnitz_b(n).to_string()])?;
            }
        }
        Explore::Partitions { n, max_part } => {
            out.write_record(["partition", "parts", "chains"])?;
            for p in enumerate_distinct(n, max_part) {
                out.write_record([p.to_string(), p.len().to_string(), decompose_chains(&p).len().to_string()])?;
            }
        }
        Explore::Counts { max_n, max_ijk, bound } => {
            for row in count_table(max_n, max_ijk, bound) {
                out.serialize(row)?;
            }
        }
    }
    out.flush()
}
