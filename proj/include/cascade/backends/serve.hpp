#pragma once

#include <memory>
#include <string>
#include <thread>

#include "cascade/backends/clients.hpp"

namespace cascade {

// In-process HTTP server exposing any client implementations under the wire
// schemas the Http*Client classes speak. Used by tests and by CLI
// integration runs against mock backends. Binds to an ephemeral port on
// 127.0.0.1; stops and joins on destruction.
class MockServer {
 public:
  MockServer(ASRClient* asr, MTClient* mt, LLMClient* llm,
             ScorerClient* scorer = nullptr);
  ~MockServer();

  MockServer(const MockServer&) = delete;
  MockServer& operator=(const MockServer&) = delete;

  int port() const { return port_; }
  std::string endpoint() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int port_ = 0;
};

}  // namespace cascade
