// placeholder; full command-line tool lands with the JSON layer
int main() { return 2; }
