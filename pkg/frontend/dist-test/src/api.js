export class ApiError extends Error {
    code;
    constructor(code, message) {
        super(message);
        this.code = code;
    }
}
export class ApiClient {
    baseUrl;
    transport;
    constructor(baseUrl, transport) {
        this.baseUrl = baseUrl;
        this.transport = transport;
    }
    async post(path, payload) {
        let resp;
        try {
            resp = await this.transport(`${this.baseUrl}${path}`, {
                method: "POST",
                headers: { "Content-Type": "application/json" },
                body: JSON.stringify(payload),
            });
        }
        catch (err) {
            throw new ApiError("network_error", `cannot reach the layout service: ${String(err)}`);
        }
        const body = (await resp.json());
        if (resp.status !== 200) {
            const e = body;
            throw new ApiError(e.code ?? "error", e.message ?? `HTTP ${resp.status}`);
        }
        return body;
    }
    layout(request) {
        return this.post("/api/layout", request);
    }
    profile(dataset) {
        return this.post("/api/profile", dataset);
    }
    simulateSample(request) {
        return this.post("/api/simulate-sample", request);
    }
}
