#pragma once

// Exit-code contract shared by the command-line tools:
//   0 success, 1 configuration or usage error, 2 runtime or budget error.

#include <exception>
#include <filesystem>
#include <iostream>
#include <stdexcept>

#include "qwalk/config.hpp"
#include "qwalk/errors.hpp"

namespace qwalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitRuntime = 2;

template <typename Fn>
int guarded(const char* tool, Fn&& fn) {
    try {
        fn();
        return kExitOk;
    } catch (const ConfigError& e) {
        std::cerr << tool << ": config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const BudgetExceeded& e) {
        std::cerr << tool << ": " << e.what() << '\n';
        return kExitRuntime;
    } catch (const StateCorruption& e) {
        std::cerr << tool << ": state corruption: " << e.what() << '\n';
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << tool << ": error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

}  // namespace qwalk::cli
