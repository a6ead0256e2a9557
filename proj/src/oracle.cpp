#include "tropws/oracle.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "tropws/io.hpp"

namespace trop {

int run_with_timeout(const std::string& command, int timeout_sec) {
    pid_t pid = fork();
    if (pid < 0) throw oracle_error("fork failed");
    if (pid == 0) {
        setpgid(0, 0);
        execl("/bin/sh", "sh", "-c", command.c_str(), (char*)nullptr);
        _exit(127);
    }
    auto deadline = std::chrono::steady_clock::now() + std::chrono::seconds(timeout_sec);
    while (true) {
        int status = 0;
        pid_t done = waitpid(pid, &status, WNOHANG);
        if (done == pid) {
            if (WIFEXITED(status)) return WEXITSTATUS(status);
            return 128;
        }
        if (std::chrono::steady_clock::now() > deadline) {
            kill(-pid, SIGKILL);
            waitpid(pid, &status, 0);
            throw oracle_error("oracle timed out after " + std::to_string(timeout_sec) +
                               "s: " + command);
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
}

TropicalCycle oracle_query(const OracleSpec& spec, const IMat& projection,
                           const TropicalCycle& trop_u) {
    char req_tmpl[] = "/tmp/tropws-req-XXXXXX";
    char resp_tmpl[] = "/tmp/tropws-resp-XXXXXX";
    int rfd = mkstemp(req_tmpl);
    int sfd = mkstemp(resp_tmpl);
    if (rfd < 0 || sfd < 0) throw oracle_error("cannot create oracle temp files");
    close(rfd);
    close(sfd);
    std::string req_path(req_tmpl), resp_path(resp_tmpl);
    write_file(req_path, serialize_oracle_request(projection, trop_u));
    std::string cmd = spec.command + " " + req_path + " " + resp_path;
    int status;
    try {
        status = run_with_timeout(cmd, spec.timeout_sec);
    } catch (...) {
        unlink(req_path.c_str());
        unlink(resp_path.c_str());
        throw;
    }
    if (status != 0) {
        unlink(req_path.c_str());
        unlink(resp_path.c_str());
        throw oracle_error("oracle exited with status " + std::to_string(status));
    }
    std::string resp;
    try {
        resp = read_file(resp_path);
        TropicalCycle out = parse_cycle(resp);
        unlink(req_path.c_str());
        unlink(resp_path.c_str());
        return out;
    } catch (const input_error& e) {
        unlink(req_path.c_str());
        unlink(resp_path.c_str());
        throw oracle_error(std::string("unparsable oracle response: ") + e.what());
    }
}

}  // namespace trop
