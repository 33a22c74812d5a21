// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Sinlets Project Contributors

#include "sinlet/error.hpp"

namespace sinlet {

int exit_code(ErrorClass cls) noexcept {
    switch (cls) {
        case ErrorClass::Usage: return 2;
        case ErrorClass::Parse: return 3;
        case ErrorClass::Domain: return 4;
        case ErrorClass::Aliasing: return 5;
    }
    return 1;
}

}  // namespace sinlet
