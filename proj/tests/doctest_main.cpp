#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "sepalt/numeric.hpp"

int main(int argc, char** argv) {
  sepalt::init_precision();
  return doctest::Context(argc, argv).run();
}
