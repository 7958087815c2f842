// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------

#include "mimoic/cli.hpp"

int main(int argc, char** argv) { return mimoic::run_cli(argc, argv); }
