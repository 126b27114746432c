// Parsing, arithmetic, monomial orders and a first Groebner basis.

use herzog::groebner::{buchberger, s_polynomial, GbConfig, Ideal};
use herzog::poly::{parse_polynomial, Field, MonomialOrder};
use herzog::Result;

pub fn run_example() -> Result<()> {
    let q = Field::Rational;
    let f = parse_polynomial("X0*X2 - X1^2", q, 3)?;
    let g = parse_polynomial("1/2*X0^2 + X1*X2 - 3", q, 3)?;
    println!("f = {f}");
    println!("g = {g}");
    println!("f + g = {}", &f + &g);
    println!("f * g = {}", &f * &g);

    for ord in [MonomialOrder::Lex, MonomialOrder::DegRevLex] {
        let (m, c) = g.leading_term(&ord)?;
        println!("{ord}: in(g) = {c}*{m}, g = {}", g.to_string_ordered(&ord));
    }

    let ord = MonomialOrder::Lex;
    println!("S(f, g) = {}", s_polynomial(&f, &g, &ord)?);

    let f2 = Field::prime(2)?;
    let h = parse_polynomial("X0^2 + X0*X1 + X1^2", f2, 2)?;
    println!("over {f2}: h^2 = {}", &h * &h);

    let ideal = Ideal::new(q, 3, vec![f, parse_polynomial("X0*X1 - X2^2", q, 3)?])?;
    let gb = buchberger(&ideal, &ord, &GbConfig::default())?.reduced_basis();
    println!("reduced basis of {ideal}:");
    for e in gb.elements() {
        println!("  {}", e.to_string_ordered(&ord));
    }
    println!("initial ideal: {}", gb.initial_ideal());
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
