// GF(2^6) from the default primitive modulus: traces, logarithms, cubes.

use tricorr::field::{FieldCtx, FieldElement};

fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = FieldCtx::new(6, None)?;
    println!("GF(2^{}) over modulus {:#x}, generator order {}", f.m(), f.modulus(), f.generator_order());

    let g = f.generator();
    let x = f.pow(g, 10);
    println!("g^10 = {x}, dlog = {}, inverse = {}", f.dlog(x)?, f.inv(x)?);
    println!("Tr_6(g^10) = {}, Tr_(6/3)(g^10) = {}", f.abs_trace(x), f.trace(6, 3, x)?);

    let subfield: Vec<String> = f.elements().filter(|&y| f.in_subfield(y, 3)).map(|y| y.to_string()).collect();
    println!("GF(8) inside GF(64): {}", subfield.join(" "));

    let cubes = f.nonzero_elements().filter(|&a| f.is_cube(a).unwrap_or(false)).count();
    println!("{cubes} of {} nonzero elements are cubes", f.order());
    assert!(f.is_cube(FieldElement::ONE)?);
    Ok(())
}

fn main() {
    run_example().expect("field example");
}
