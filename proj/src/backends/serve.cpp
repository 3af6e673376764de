#include "cascade/backends/serve.hpp"

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "cascade/core/errors.hpp"

using nlohmann::json;

namespace cascade {

struct MockServer::Impl {
  httplib::Server server;
  std::thread thread;
};

namespace {

void reply_json(httplib::Response& res, const json& body) {
  res.set_content(body.dump(), "application/json");
}

void reply_error(httplib::Response& res, int status, const std::string& message) {
  res.status = status;
  res.set_content(json{{"error", message}}.dump(), "application/json");
}

template <typename Fn>
void handle(const httplib::Request& req, httplib::Response& res, Fn fn) {
  json body;
  try {
    body = json::parse(req.body);
  } catch (const json::exception& e) {
    reply_error(res, 400, std::string("invalid JSON: ") + e.what());
    return;
  }
  try {
    reply_json(res, fn(body));
  } catch (const BackendError& e) {
    reply_error(res, 500, e.what());
  } catch (const std::exception& e) {
    reply_error(res, 400, e.what());
  }
}

}  // namespace

MockServer::MockServer(ASRClient* asr, MTClient* mt, LLMClient* llm,
                       ScorerClient* scorer)
    : impl_(std::make_unique<Impl>()) {
  auto& server = impl_->server;

  if (asr) {
    server.Post("/transcribe", [asr](const httplib::Request& req, httplib::Response& res) {
      handle(req, res, [asr](const json& body) {
        AudioSpan span{body.at("audio").get<std::string>(),
                       body.at("start_s").get<double>(),
                       body.at("end_s").get<double>()};
        NBestList nbest = asr->transcribe(span, body.at("n_best").get<int>());
        json hyps = json::array();
        for (const auto& h : nbest.hypotheses) {
          hyps.push_back({{"text", h.text}, {"score", h.score}});
        }
        return json{{"hypotheses", hyps}};
      });
    });
  }
  if (mt) {
    server.Post("/translate", [mt](const httplib::Request& req, httplib::Response& res) {
      handle(req, res, [mt](const json& body) {
        auto sentences = body.at("sentences").get<std::vector<std::string>>();
        return json{{"translations", mt->translate(sentences)}};
      });
    });
  }
  if (llm) {
    server.Post("/complete", [llm](const httplib::Request& req, httplib::Response& res) {
      handle(req, res, [llm](const json& body) {
        return json{{"text", llm->complete(body.at("prompt").get<std::string>())}};
      });
    });
  }
  if (scorer) {
    server.Post("/score", [scorer](const httplib::Request& req, httplib::Response& res) {
      handle(req, res, [scorer](const json& body) {
        auto srcs = body.at("srcs").get<std::vector<std::string>>();
        auto hyps = body.at("hyps").get<std::vector<std::string>>();
        auto refs = body.at("refs").get<std::vector<std::string>>();
        return json{{"score", scorer->score(srcs, hyps, refs)}};
      });
    });
  }

  port_ = server.bind_to_any_port("127.0.0.1");
  if (port_ <= 0) throw BackendError("mock server failed to bind a port");
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  server.wait_until_ready();
}

MockServer::~MockServer() {
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

std::string MockServer::endpoint() const {
  return "http://127.0.0.1:" + std::to_string(port_);
}

}  // namespace cascade
