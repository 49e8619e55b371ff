#pragma once

#include <memory>
#include <string>

#include "pwim/error.h"
#include "pwim/session.h"

namespace pwim {

struct ApiRequest {
  std::string method;  // "GET", "POST", ...
  std::string path;
  std::string body;
};

struct ApiResponse {
  int status = 200;
  std::string body;  // JSON
};

/// HTTP/JSON surface of PlayService, independent of any transport.
///
///   GET  /api/domains                -> {"domains":[...]}
///   POST /api/session                {"domain"}
///                                    -> {"session_id","step","actions":[{"action_id","summary"}]}
///   GET  /api/session/{id}           -> same plus "facts" and "transcript"
///   POST /api/session/{id}/intent    {"text"}
///                                    -> {"step","ranked":[{"action_id","summary","similarity","intensity","enlarged"}]}
///   POST /api/session/{id}/act       {"action_id","step","intent_text"?}
///                                    -> {"event","actions"}
///
/// Errors are {"error":"<code>","detail":"..."}.
class ApiRouter {
 public:
  explicit ApiRouter(PlayService& service) : service_(service) {}

  ApiResponse handle(const ApiRequest& request);

  static int status_for(ErrorCode code);

 private:
  PlayService& service_;
};

ApiResponse error_response(int status, std::string_view code, std::string_view detail);

struct ServerOptions {
  std::string host = "0.0.0.0";
  int port = 8080;  // 0 picks a free port
  std::string static_dir;  // served at "/" when non-empty
};

/// Blocking HTTP server bound to an ApiRouter.
class HttpServer {
 public:
  HttpServer(ApiRouter& router, ServerOptions options);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// False when the address is unavailable (e.g. port in use).
  bool bind();
  int port() const { return port_; }
  /// Serves until stop(). Requires a successful bind().
  void listen();
  /// Blocks until a listen() running on another thread accepts connections.
  void wait_until_ready() const;
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  ServerOptions options_;
  int port_ = 0;
};

}  // namespace pwim
