#pragma once

#include "riskkit/service/session_service.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace riskkit::service {

struct ApiResponse {
    int status = 200;
    io::Json body;
};

/// Routes one request to the service:
///   POST /sessions {protocol, options?}   GET /sessions
///   GET /sessions/{id}/next               POST /sessions/{id}/answers {question_id, chosen}
///   GET /sessions/{id}/profile            GET /sessions/{id}
/// Errors come back as {code, message} with 400, 404, 409 or 500.
ApiResponse dispatch(SessionService& service, std::string_view method, std::string_view path,
                     std::string_view body);

struct ServerConfig {
    std::string host = "127.0.0.1";
    int port = 8080;
    /// Directory served at / (the UI bundle), if any.
    std::optional<std::string> static_dir;
};

class HttpServer {
public:
    HttpServer(SessionService& service, ServerConfig config);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Binds (port 0 picks a free port) and returns the bound port.
    int bind();
    /// Serves until stop(); call bind() first.
    void run();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace riskkit::service
