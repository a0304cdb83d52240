// Placeholder while the library comes up; replaced by the full CLI below.
int main() { return 0; }
