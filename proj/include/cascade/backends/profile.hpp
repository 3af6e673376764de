#pragma once

#include <string>

namespace cascade {

enum class BackendKind { asr, mt, llm, scorer };

const char* backend_kind_name(BackendKind kind);

// Connection and decode parameters for one inference service.
struct BackendProfile {
  BackendKind kind = BackendKind::llm;
  std::string endpoint;        // base URL, e.g. http://127.0.0.1:8080
  double timeout_s = 30.0;
  int max_retries = 2;         // re-attempts after the first try
  int retry_backoff_ms = 100;  // doubled on every retry
  int parallelism = 4;         // max in-flight requests
  int beam = 5;
  int max_new_tokens = 512;
};

// Throws DataError on invalid values.
void validate_profile(const BackendProfile& profile);

}  // namespace cascade
