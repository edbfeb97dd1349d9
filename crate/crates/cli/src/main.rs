fn main() {
    println!("{}", ratecert_core::probe(1.0));
}
