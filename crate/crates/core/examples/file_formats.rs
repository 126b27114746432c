// Reading ideal files and complex JSON, as the command-line tool does.

use herzog::collapse::collapse;
use herzog::groebner::{buchberger, GbConfig};
use herzog::io::{parse_complex_json, parse_ideal_file, write_ideal_file, Provenance};
use herzog::{Error, Result};

const TWISTED_CUBIC: &str = "\
# twisted cubic
vars: 4
order: degrevlex
field: Fp:7
X0*X2 - X1^2
X0*X3 - X1*X2
X1*X3 - X2^2  # last minor
";

pub fn run_example() -> Result<()> {
    let file = parse_ideal_file(TWISTED_CUBIC, "twisted.ideal", None, None)?;
    let gb = buchberger(&file.ideal, &file.order, &GbConfig::default())?;
    println!("{} over {}: in = {}", file.order, file.ideal.field(), gb.initial_ideal());
    print!("{}", write_ideal_file(&gb.reduced_basis().to_ideal(), &file.order));

    let prov = Provenance::new(TWISTED_CUBIC.as_bytes(), &file.order, file.ideal.field(), 0, 12, 8);
    println!("{}", serde_json::to_string(&prov).expect("serializable"));

    match parse_ideal_file("X0*X1 +\n", "broken.ideal", None, None) {
        Err(e @ Error::Parse { .. }) => println!("rejected: {e}"),
        other => println!("unexpected: {other:?}"),
    }

    let c = parse_complex_json(r#"{"n": 4, "edges": [[0,1],[1,2],[2,0],[2,3],[3,4]]}"#, "graph.json")?;
    let g = c.graph.expect("edges give a graph");
    let r = collapse(&g);
    println!("collapse: ell = {}, removed {:?}, core {:?}", r.ell, r.removed, r.core);
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
