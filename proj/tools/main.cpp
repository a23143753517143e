#include "commands.h"

#include <iostream>

int main(int argc, char **argv)
{
	return liehopf::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
