#include "wqed/cli_app.hpp"

int main(int argc, char** argv) { return wqed::run_cli(argc, argv); }
