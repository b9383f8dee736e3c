// Builds the parity refutation for an odd cycle into a bipartite target,
// serializes it as a trace, reads it back and checks it.

use std::error::Error;

use hcolor::refute::step_bound;
use hcolor::{check_refutation, encode, is_bipartite, refute, BipartiteWitness, Graph, ResolutionProof};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = Graph::cycle(7);
    let h = Graph::cycle(6);
    let (BipartiteWitness::OddWalk(walk), BipartiteWitness::Bipartite(split)) = (is_bipartite(&g), is_bipartite(&h))
    else {
        return Err("expected an odd source and a bipartite target".into());
    };
    println!("odd closed walk: {:?}", walk.vertices());

    let proof = refute(&g, &h, &walk, &split)?;
    let (cnf, _) = encode(&g, &h)?;
    let trace = proof.to_trace();
    let reread = ResolutionProof::parse_trace(&trace, &cnf)?;
    let report = check_refutation(&cnf, &reread)?;
    println!(
        "{} steps, {} derived, bound {}",
        report.steps,
        report.derived,
        step_bound(walk.len(), h.num_vertices())
    );
    for line in trace.lines().rev().take(3).collect::<Vec<_>>().into_iter().rev() {
        println!("  {line}");
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
