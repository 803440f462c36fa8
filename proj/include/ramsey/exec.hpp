#pragma once

namespace ramsey {

// Selects the serial reference kernel or the OpenMP kernel.
// `automatic` picks parallel only when more than one OpenMP thread is available.
enum class Exec { serial, parallel, automatic };

bool use_parallel(Exec exec) noexcept;

} // namespace ramsey
