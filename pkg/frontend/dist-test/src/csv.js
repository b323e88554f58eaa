/** Parse the shared `label,value` dataset CSV. Throws Error with a
 * user-facing message on anything malformed; the caller keeps prior state. */
export function parseDatasetCsv(text, id = "pasted") {
    const lines = text
        .split(/\r?\n/)
        .map((l) => l.trim())
        .filter((l) => l.length > 0);
    if (lines.length === 0)
        throw new Error("empty CSV");
    const header = splitRow(lines[0]).map((c) => c.toLowerCase());
    if (header[0] !== "label" || header[1] !== "value") {
        throw new Error("first row must be the header: label,value");
    }
    const categories = lines.slice(1).map((line, i) => {
        const cells = splitRow(line);
        if (cells.length < 2)
            throw new Error(`row ${i + 2}: expected label,value`);
        const value = Number(cells[1]);
        if (!Number.isFinite(value))
            throw new Error(`row ${i + 2}: "${cells[1]}" is not a number`);
        if (value < 0)
            throw new Error(`row ${i + 2}: values must be >= 0`);
        return { label: cells[0], value };
    });
    if (categories.length < 2)
        throw new Error("need at least 2 categories");
    const labels = new Set(categories.map((c) => c.label));
    if (labels.size !== categories.length)
        throw new Error("labels must be unique");
    if (!categories.some((c) => c.value > 0))
        throw new Error("at least one value must be > 0");
    return { id, categories };
}
/** Minimal CSV row split: handles double-quoted cells with embedded commas. */
function splitRow(line) {
    const cells = [];
    let cur = "";
    let quoted = false;
    for (let i = 0; i < line.length; i++) {
        const ch = line[i];
        if (quoted) {
            if (ch === '"' && line[i + 1] === '"') {
                cur += '"';
                i++;
            }
            else if (ch === '"') {
                quoted = false;
            }
            else {
                cur += ch;
            }
        }
        else if (ch === '"') {
            quoted = true;
        }
        else if (ch === ",") {
            cells.push(cur.trim());
            cur = "";
        }
        else {
            cur += ch;
        }
    }
    cells.push(cur.trim());
    return cells;
}
