#include "riskkit/service/http_server.hpp"

#include "riskkit/error.hpp"
#include "riskkit/io/serialize.hpp"

#include <fmt/format.h>
#include <httplib.h>

#include <atomic>
#include <vector>

namespace riskkit::service {
namespace {

ApiResponse error(int status, std::string_view code, std::string_view message) {
    return {status, {{"code", code}, {"message", message}}};
}

std::vector<std::string_view> split_path(std::string_view path) {
    if (const auto q = path.find('?'); q != std::string_view::npos) {
        path = path.substr(0, q);
    }
    std::vector<std::string_view> parts;
    while (!path.empty()) {
        const auto slash = path.find('/');
        const auto part = path.substr(0, slash);
        if (!part.empty()) {
            parts.push_back(part);
        }
        if (slash == std::string_view::npos) {
            break;
        }
        path.remove_prefix(slash + 1);
    }
    return parts;
}

io::Json parse_body(std::string_view body) {
    auto j = io::parse_json(body.empty() ? "{}" : body, "request body");
    if (!j.is_object()) {
        throw ValidationError("request body must be a JSON object");
    }
    return j;
}

std::string response_text(const io::Json& chosen) {
    if (chosen.is_string()) {
        return chosen.get<std::string>();
    }
    if (chosen.is_number_integer()) {
        return std::to_string(chosen.get<long long>());
    }
    throw ValidationError("'chosen' must be a string or an integer");
}

ApiResponse route(SessionService& service, std::string_view method, std::string_view path,
                  std::string_view body) {
    const auto parts = split_path(path);
    if (parts.empty() || parts[0] != "sessions") {
        return error(404, "not_found", fmt::format("no route for {} {}", method, path));
    }
    if (parts.size() == 1 && method == "GET") {
        return {200, service.list()};
    }
    if (parts.size() == 1 && method == "POST") {
        const auto j = parse_body(body);
        if (!j.contains("protocol") || !j.at("protocol").is_string()) {
            throw ValidationError("'protocol' is required");
        }
        const auto protocol = elicitation::parse_protocol(j.at("protocol").get<std::string>());
        const auto options =
            io::session_options_from_json(j.contains("options") ? j.at("options") : io::Json::object());
        return {201, envelope_to_json(service.create(protocol, options))};
    }
    if (parts.size() >= 2) {
        const std::string id(parts[1]);
        if (!valid_session_id(id)) {
            return error(404, "not_found", fmt::format("session {} not found", id));
        }
        if (parts.size() == 2 && method == "GET") {
            return {200, envelope_to_json(service.get(id))};
        }
        if (parts.size() == 3 && parts[2] == "next" && method == "GET") {
            return {200, service.next(id)};
        }
        if (parts.size() == 3 && parts[2] == "profile" && method == "GET") {
            return {200, service.profile(id)};
        }
        if (parts.size() == 3 && parts[2] == "answers" && method == "POST") {
            const auto j = parse_body(body);
            if (!j.contains("question_id") || !j.at("question_id").is_string()) {
                throw ValidationError("'question_id' is required");
            }
            if (!j.contains("chosen")) {
                throw ValidationError("'chosen' is required");
            }
            return {200, envelope_to_json(service.answer(id, j.at("question_id").get<std::string>(),
                                                         response_text(j.at("chosen"))))};
        }
    }
    return error(404, "not_found", fmt::format("no route for {} {}", method, path));
}

} // namespace

ApiResponse dispatch(SessionService& service, std::string_view method, std::string_view path,
                     std::string_view body) {
    try {
        return route(service, method, path, body);
    } catch (const NotFoundError& e) {
        return error(404, "not_found", e.what());
    } catch (const ConflictError& e) {
        return error(409, "conflict", e.what());
    } catch (const StorageError& e) {
        return error(500, "storage_error", e.what());
    } catch (const Error& e) {
        return error(400, "validation_error", e.what());
    } catch (const std::exception& e) {
        return error(500, "internal_error", e.what());
    }
}

struct HttpServer::Impl {
    Impl(SessionService& s, ServerConfig c) : service(s), config(std::move(c)) {}

    SessionService& service;
    ServerConfig config;
    httplib::Server server;
    std::atomic<bool> bound{false};
};

HttpServer::HttpServer(SessionService& service, ServerConfig config)
    : impl_(std::make_unique<Impl>(service, std::move(config))) {
    auto handler = [this](const httplib::Request& req, httplib::Response& res) {
        const auto r = dispatch(impl_->service, req.method, req.path, req.body);
        res.status = r.status;
        res.set_content(r.body.dump(), "application/json");
    };
    impl_->server.Get(R"(/sessions(/.*)?)", handler);
    impl_->server.Post(R"(/sessions(/.*)?)", handler);
    if (impl_->config.static_dir) {
        if (!impl_->server.set_mount_point("/", *impl_->config.static_dir)) {
            throw ValidationError(fmt::format("static directory {} does not exist", *impl_->config.static_dir));
        }
    }
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind() {
    int port = impl_->config.port;
    if (port == 0) {
        port = impl_->server.bind_to_any_port(impl_->config.host);
    } else if (!impl_->server.bind_to_port(impl_->config.host, port)) {
        port = -1;
    }
    if (port < 0) {
        throw StorageError(fmt::format("cannot bind {}:{}", impl_->config.host, impl_->config.port));
    }
    impl_->bound = true;
    return port;
}

void HttpServer::run() {
    if (!impl_->bound) {
        bind();
    }
    impl_->server.listen_after_bind();
}

void HttpServer::stop() {
    if (impl_ && impl_->server.is_running()) {
        impl_->server.stop();
    }
}

} // namespace riskkit::service
