// Runs DPLL on PHP^{n+1}_n for small n and prints the CSV table.

use std::error::Error;

use hcolor::php::to_csv;
use hcolor::{bench_php, encode, gen_php, Graph};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let (enc, _) = encode(&Graph::complete(4), &Graph::complete(3))?;
    assert_eq!(gen_php(4, 3).clause_set(), enc.clause_set());

    let rows = bench_php(2, 6, None)?;
    print!("{}", to_csv(&rows));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
