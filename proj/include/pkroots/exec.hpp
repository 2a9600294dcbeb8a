#pragma once

namespace pkroots {

/// Selects the OpenMP kernel or its serial reference.
enum class Exec { serial, parallel };

}  // namespace pkroots
