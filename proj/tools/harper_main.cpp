#include "harper/cli.hpp"

int main(int argc, char** argv)
{
    return harper::cli::run(argc, argv);
}
