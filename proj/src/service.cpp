#include "mlix/service.hpp"

#include <stdexcept>

namespace mlix {

Service make_service(ServiceId id, std::vector<ParameterId> inputs,
                     std::vector<ParameterId> outputs,
                     std::map<std::string, std::string> attributes) {
    Service s;
    s.id = id;
    s.inputs = make_param_set(std::move(inputs));
    s.outputs = make_param_set(std::move(outputs));
    s.attributes = std::move(attributes);
    if (s.inputs.empty()) {
        throw std::invalid_argument("service " + std::to_string(id) +
                                    " has no input parameters");
    }
    return s;
}

}  // namespace mlix
