#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "tsih/int_matrix.hpp"

int main(int argc, char** argv) {
    // Verify every Smith decomposition against its input while testing.
    tsih::set_self_check(true);
    return doctest::Context(argc, argv).run();
}
