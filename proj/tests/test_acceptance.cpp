#include <iostream>

#include "torelli/acceptance.hpp"

int main() { return torelli::run_acceptance(std::cout, false); }
