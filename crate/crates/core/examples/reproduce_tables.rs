//! Reproduces a benchmark table and prints it as markdown.
//!
//! cargo run --release --example reproduce_tables -- [1|2|3] [desk|full]

use anisofem::cli::render::{render_table, Format};
use anisofem::experiments::{reproduce_table, RunOptions, Scale};

fn main() -> anyhow::Result<()> {
    let mut args = std::env::args().skip(1);
    let id: u8 = args.next().as_deref().unwrap_or("1").parse()?;
    let scale: Scale = args.next().as_deref().unwrap_or("desk").parse()?;
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let table = reproduce_table(id, scale, &RunOptions::default(), threads)?;
    print!("{}", render_table(&table, Format::Markdown));
    Ok(())
}
