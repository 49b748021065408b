#include "nco/nco.hpp"
int main() { return 0; }
