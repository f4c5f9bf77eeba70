#include <iostream>
#include <vector>

#include "impalg/cli.hpp"

int main(int argc, char** argv) {
    const auto result = impalg::cli::run_cli(std::vector<std::string>(argv + 1, argv + argc));
    for (const std::string& note : result.diagnostics) std::cerr << note << '\n';
    if (!result.stdout_payload.empty()) {
        std::cout << result.stdout_payload;
        if (result.stdout_payload.back() != '\n') std::cout << '\n';
    }
    return result.exit_code;
}
