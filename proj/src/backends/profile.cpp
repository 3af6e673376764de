#include "cascade/backends/profile.hpp"

#include "cascade/core/errors.hpp"

namespace cascade {

const char* backend_kind_name(BackendKind kind) {
  switch (kind) {
    case BackendKind::asr: return "asr";
    case BackendKind::mt: return "mt";
    case BackendKind::llm: return "llm";
    case BackendKind::scorer: return "scorer";
  }
  return "unknown";
}

void validate_profile(const BackendProfile& profile) {
  if (profile.endpoint.empty()) {
    throw DataError(std::string("backend profile (") + backend_kind_name(profile.kind) +
                    "): endpoint must be set");
  }
  if (!(profile.timeout_s > 0.0)) {
    throw DataError("backend profile: timeout_s must be > 0");
  }
  if (profile.max_retries < 0) {
    throw DataError("backend profile: max_retries must be >= 0");
  }
  if (profile.retry_backoff_ms < 0) {
    throw DataError("backend profile: retry_backoff_ms must be >= 0");
  }
  if (profile.parallelism < 1) {
    throw DataError("backend profile: parallelism must be >= 1");
  }
  if (profile.beam < 1) {
    throw DataError("backend profile: beam must be >= 1");
  }
  if (profile.max_new_tokens < 1) {
    throw DataError("backend profile: max_new_tokens must be >= 1");
  }
}

}  // namespace cascade
