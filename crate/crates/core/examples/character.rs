//! Conjugacy classes of N, the character of the 111-dimensional module on
//! them, and its decomposition into irreducibles.

use lyons::verifier::char_table;
use lyons::verifier::character::{multiplicity, table_columns};
use lyons::verifier::{Context, CyclotomicValue};

fn main() {
    let ctx = Context::new().expect("construction");
    let classes = ctx.classes().expect("classes");
    println!("{} classes", classes.len());
    for c in classes {
        println!("order {:2} size {:3} value {}", c.order, c.size, c.value);
    }
    let cols = table_columns(2304);
    let sizes: Vec<i64> = cols.iter().map(|c| c.size).collect();
    let psi: Vec<CyclotomicValue> = cols.iter().map(|c| CyclotomicValue::int(c.psi)).collect();
    for chi in char_table::irreducibles() {
        let m = multiplicity(&sizes, &psi, &chi, 2304).expect("integral");
        if m > 0 {
            println!("degree {:2} with multiplicity {m}", chi[0]);
        }
    }
}
