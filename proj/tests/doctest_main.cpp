#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "resum/real.hpp"

int main(int argc, char** argv)
{
    resum::set_precision(resum::precision_from_env(64));
    doctest::Context ctx;
    ctx.applyCommandLine(argc, argv);
    return ctx.run();
}
