import { ApiClient } from "./api.js";
import { badgeText, UiStore } from "./store.js";
import { layoutToSvg } from "./render.js";
import { formatValue } from "./values.js";
const SAMPLE_CSV = `label,value
warren,43000
steyer,16000
buttigieg,8500
sanders,5500
biden,3000
klobuchar,1200
gabbard,78
`;
function el(id) {
    const node = document.getElementById(id);
    if (!node)
        throw new Error(`missing element #${id}`);
    return node;
}
function main() {
    const transport = (url, init) => fetch(url, init);
    const store = new UiStore(new ApiClient("", transport), { plotWidthPx: 560, plotHeightPx: 330 });
    const csvInput = el("csv-input");
    const fileInput = el("file-input");
    const loadButton = el("load-btn");
    const datasetError = el("dataset-error");
    const banner = el("banner");
    const badge = el("badge");
    const profilePanel = el("profile-panel");
    const t1Slider = el("t1-slider");
    const t2Slider = el("t2-slider");
    const t1Value = el("t1-value");
    const t2Value = el("t2-value");
    const chartStandard = el("chart-standard");
    const chartWrapped = el("chart-wrapped");
    const pendingDot = el("pending");
    const modeButtons = Array.from(document.querySelectorAll("button[data-mode]"));
    csvInput.value = SAMPLE_CSV;
    loadButton.addEventListener("click", () => store.loadDatasetCsv(csvInput.value));
    fileInput.addEventListener("change", () => {
        const file = fileInput.files?.[0];
        if (!file)
            return;
        void file.text().then((text) => {
            csvInput.value = text;
            store.loadDatasetCsv(text, file.name.replace(/\.[^.]*$/, ""));
        });
    });
    t1Slider.addEventListener("input", () => store.setT1(Number(t1Slider.value)));
    t2Slider.addEventListener("input", () => store.setT2(Number(t2Slider.value)));
    for (const button of modeButtons) {
        button.addEventListener("click", () => store.setViewMode(button.dataset.mode));
    }
    store.subscribe((state) => {
        datasetError.textContent = state.datasetError ?? "";
        datasetError.hidden = !state.datasetError;
        banner.textContent = state.banner ?? "";
        banner.hidden = !state.banner;
        pendingDot.hidden = !state.pending;
        const disabled = !state.dataset;
        t1Slider.disabled = disabled;
        t2Slider.disabled = disabled;
        t1Slider.min = String(state.t1Min);
        t1Slider.max = String(state.t1Max);
        t1Slider.step = String(Math.max((state.t1Max - state.t1Min) / 200, 1e-6));
        t1Slider.value = String(state.t1);
        t2Slider.min = "0.05";
        t2Slider.max = "1";
        t2Slider.step = "0.05";
        t2Slider.value = String(state.t2);
        t1Value.textContent = formatValue(state.t1);
        t2Value.textContent = state.t2.toFixed(2);
        const text = badgeText(state.profile);
        badge.textContent = text ?? "load a dataset";
        badge.className = text ? `badge badge-${text}` : "badge";
        if (state.profile) {
            const p = state.profile.profile;
            const hs = p.h_spread === "inf" ? "inf" : formatValue(p.h_spread);
            profilePanel.textContent =
                `normalized entropy ${(p.normalized_entropy).toFixed(3)} (bin ${p.entropy_bin}), ` +
                    `H-spread ${hs} (bin ${p.hspread_bin}), reasons: ${state.profile.recommendation.reasons.join(", ") || "none"}`;
        }
        else {
            profilePanel.textContent = "";
        }
        for (const button of modeButtons) {
            button.classList.toggle("active", button.dataset.mode === state.viewMode);
        }
        const showStandard = state.viewMode !== "wrapped";
        const showWrapped = state.viewMode !== "standard";
        chartStandard.parentElement.hidden = !showStandard;
        chartWrapped.parentElement.hidden = !showWrapped;
        chartStandard.innerHTML = showStandard && state.standardLayout ? layoutToSvg(state.standardLayout) : "";
        chartWrapped.innerHTML = showWrapped && state.wrappedLayout ? layoutToSvg(state.wrappedLayout) : "";
    });
    store.loadDatasetCsv(SAMPLE_CSV, "facebook-ads");
}
main();
