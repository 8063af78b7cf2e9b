fn main() {
    // CLI wired up after the library lands
}
