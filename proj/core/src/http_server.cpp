#include "httplib.h"
#include "pwim/api.h"

namespace pwim {

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(ApiRouter& router, ServerOptions options)
    : impl_(std::make_unique<Impl>()), options_(std::move(options)) {
  auto& server = impl_->server;
  // httplib's default also sets SO_REUSEPORT, which lets a second server share
  // a busy port instead of failing to bind.
  server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const char*>(&yes), sizeof yes);
  });
  if (!options_.static_dir.empty()) server.set_mount_point("/", options_.static_dir);

  const auto dispatch = [&router](const httplib::Request& req, httplib::Response& res) {
    const ApiResponse out = router.handle({req.method, req.path, req.body});
    res.status = out.status;
    res.set_content(out.body, "application/json");
  };
  server.Get(".*", dispatch);
  server.Post(".*", dispatch);
  server.Put(".*", dispatch);
  server.Delete(".*", dispatch);
}

HttpServer::~HttpServer() { stop(); }

bool HttpServer::bind() {
  auto& server = impl_->server;
  if (options_.port == 0) {
    port_ = server.bind_to_any_port(options_.host);
    return port_ > 0;
  }
  if (!server.bind_to_port(options_.host, options_.port)) return false;
  port_ = options_.port;
  return true;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

void HttpServer::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace pwim
