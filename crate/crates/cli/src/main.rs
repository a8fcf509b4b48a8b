fn main() {
    println!("nlvae");
}
