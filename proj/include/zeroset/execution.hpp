#pragma once

namespace zeroset {

/// Worker cap for the OpenMP kernels. 0 means the OpenMP default. Results
/// never depend on this value.
struct ExecutionConfig {
  int workers = 0;
};

}  // namespace zeroset
