import {
    ApiClient,
    ApiError,
    FindingNode,
    FindingsResponse,
    UploadResponse,
} from "./api.js";
import { distributionChartSvg } from "./charts.js";
import { significanceColor } from "./color.js";
import {
    featureFrequencyLines,
    formatApiError,
    formatNodeDetail,
    formatSelectionDetail,
    formatUploadSummary,
} from "./format.js";
import { computeLayout, PlacedNode } from "./layout.js";
import { QueryScheduler } from "./query.js";
import {
    FilterState,
    filterKey,
    filtersFromQuery,
    filtersToQuery,
} from "./state.js";

const LATTICE_WIDTH = 900;
const LATTICE_HEIGHT = 520;
const PAGE_LIMIT = 400;

class CooccurApp {
    private serviceUrl: HTMLInputElement;
    private matrixFile: HTMLInputElement;
    private uploadBtn: HTMLButtonElement;
    private uploadError: HTMLElement;
    private uploadSummary: HTMLElement;
    private frequencyList: HTMLElement;
    private filterInputs: {
        minExtent: HTMLInputElement;
        maxExtent: HTMLInputElement;
        maxIntent: HTMLInputElement;
        pThreshold: HTMLInputElement;
    };
    private latticeContainer: HTMLElement;
    private latticeStatus: HTMLElement;
    private nodeDetail: HTMLElement;
    private featureList: HTMLElement;
    private runSelectionBtn: HTMLButtonElement;
    private selectionError: HTMLElement;
    private selectionResult: HTMLElement;
    private chartContainer: HTMLElement;

    private session: UploadResponse | null = null;
    private filters: FilterState;
    private findingsQueries = new QueryScheduler<FindingsResponse>();
    private visibleNodes = new Map<number, FindingNode>();

    constructor() {
        this.serviceUrl = this.element("serviceUrl") as HTMLInputElement;
        this.matrixFile = this.element("matrixFile") as HTMLInputElement;
        this.uploadBtn = this.element("uploadBtn") as HTMLButtonElement;
        this.uploadError = this.element("uploadError");
        this.uploadSummary = this.element("uploadSummary");
        this.frequencyList = this.element("frequencyList");
        this.filterInputs = {
            minExtent: this.element("minExtent") as HTMLInputElement,
            maxExtent: this.element("maxExtent") as HTMLInputElement,
            maxIntent: this.element("maxIntent") as HTMLInputElement,
            pThreshold: this.element("pThreshold") as HTMLInputElement,
        };
        this.latticeContainer = this.element("lattice");
        this.latticeStatus = this.element("latticeStatus");
        this.nodeDetail = this.element("nodeDetail");
        this.featureList = this.element("featureList");
        this.runSelectionBtn = this.element("runSelection") as HTMLButtonElement;
        this.selectionError = this.element("selectionError");
        this.selectionResult = this.element("selectionResult");
        this.chartContainer = this.element("chart");

        // restore filters from the address bar so links are shareable
        this.filters = filtersFromQuery(window.location.search);
        this.writeFilterInputs();
        this.attachListeners();
    }

    private element(id: string): HTMLElement {
        const found = document.getElementById(id);
        if (!found) throw new Error(`missing element #${id}`);
        return found;
    }

    private api(): ApiClient {
        return new ApiClient(this.serviceUrl.value.trim());
    }

    private attachListeners(): void {
        this.uploadBtn.addEventListener("click", () => {
            void this.handleUpload();
        });
        for (const input of Object.values(this.filterInputs)) {
            input.addEventListener("input", () => {
                this.onFilterChange();
            });
        }
        this.runSelectionBtn.addEventListener("click", () => {
            void this.runSelection();
        });
        this.latticeContainer.addEventListener("click", (event) => {
            const target = event.target as Element | null;
            const circle = target?.closest("circle[data-id]");
            if (!circle) return;
            const id = Number(circle.getAttribute("data-id"));
            const node = this.visibleNodes.get(id);
            if (node) this.showNodeDetail(node);
        });
    }

    private writeFilterInputs(): void {
        this.filterInputs.minExtent.value = String(this.filters.minExtent);
        this.filterInputs.maxExtent.value =
            this.filters.maxExtent === null ? "" : String(this.filters.maxExtent);
        this.filterInputs.maxIntent.value =
            this.filters.maxIntent === null ? "" : String(this.filters.maxIntent);
        this.filterInputs.pThreshold.value = this.filters.pThreshold;
    }

    private readFilterInputs(): FilterState {
        const intOrNull = (raw: string): number | null => {
            const trimmed = raw.trim();
            if (trimmed === "") return null;
            const value = Number(trimmed);
            return Number.isInteger(value) && value >= 0 ? value : null;
        };
        return {
            minExtent: intOrNull(this.filterInputs.minExtent.value) ?? 1,
            maxExtent: intOrNull(this.filterInputs.maxExtent.value),
            maxIntent: intOrNull(this.filterInputs.maxIntent.value),
            pThreshold: this.filterInputs.pThreshold.value.trim() || "1",
        };
    }

    private onFilterChange(): void {
        this.filters = this.readFilterInputs();
        const query = filtersToQuery(this.filters);
        const url = query
            ? `${window.location.pathname}?${query}`
            : window.location.pathname;
        window.history.replaceState(null, "", url);
        void this.refreshFindings();
    }

    private async handleUpload(): Promise<void> {
        const file = this.matrixFile.files?.[0];
        if (!file) {
            this.uploadError.textContent = "Choose a CSV or TSV file first.";
            return;
        }
        this.uploadError.textContent = "";
        this.uploadBtn.disabled = true;
        try {
            const upload = await this.api().uploadContext(file, file.name);
            this.session = upload;
            this.uploadSummary.textContent = formatUploadSummary(upload);
            this.renderFrequencies(upload);
            this.renderFeatureChoices(upload);
            this.selectionResult.textContent = "";
            this.selectionError.textContent = "";
            this.chartContainer.innerHTML = "";
            this.nodeDetail.textContent = "";
            await this.refreshFindings();
        } catch (error) {
            this.showError(this.uploadError, error);
        } finally {
            this.uploadBtn.disabled = false;
        }
    }

    private renderFrequencies(upload: UploadResponse): void {
        this.frequencyList.innerHTML = "";
        for (const line of featureFrequencyLines(upload)) {
            const item = document.createElement("li");
            item.textContent = line;
            this.frequencyList.appendChild(item);
        }
    }

    private renderFeatureChoices(upload: UploadResponse): void {
        this.featureList.innerHTML = "";
        upload.features.forEach((name, j) => {
            const label = document.createElement("label");
            const box = document.createElement("input");
            box.type = "checkbox";
            box.value = name;
            box.addEventListener("change", () => {
                this.runSelectionBtn.disabled = this.selectedFeatures().length === 0;
            });
            label.appendChild(box);
            label.appendChild(
                document.createTextNode(` ${name} (${upload.column_sums[j]})`),
            );
            this.featureList.appendChild(label);
        });
        this.runSelectionBtn.disabled = true;
    }

    private selectedFeatures(): string[] {
        const boxes = this.featureList.querySelectorAll<HTMLInputElement>(
            "input[type=checkbox]:checked",
        );
        return Array.from(boxes, (box) => box.value);
    }

    private async refreshFindings(): Promise<void> {
        if (!this.session) return;
        const session = this.session;
        const key = filterKey(this.filters);
        const filters = this.filters;
        this.latticeStatus.textContent = "querying...";
        try {
            const response = await this.findingsQueries.run(key, () =>
                this.api().getFindings(session.session_id, filters, {
                    limit: PAGE_LIMIT,
                }),
            );
            if (response === null) return; // superseded by a newer query
            this.renderLattice(response);
        } catch (error) {
            this.latticeContainer.innerHTML = "";
            this.visibleNodes.clear();
            this.showError(this.latticeStatus, error);
        }
    }

    private renderLattice(response: FindingsResponse): void {
        this.visibleNodes = new Map(response.nodes.map((node) => [node.id, node]));
        const placed = computeLayout(
            response.nodes.map((node) => ({ id: node.id, extentSize: node.extent_size })),
            response.edges,
            LATTICE_WIDTH,
            LATTICE_HEIGHT,
        );
        const position = new Map<number, PlacedNode>(placed.map((p) => [p.id, p]));

        const parts: string[] = [];
        parts.push(
            `<svg viewBox="0 0 ${LATTICE_WIDTH} ${LATTICE_HEIGHT}" ` +
                `width="100%" xmlns="http://www.w3.org/2000/svg">`,
        );
        for (const [a, b] of response.edges) {
            const pa = position.get(a);
            const pb = position.get(b);
            if (!pa || !pb) continue;
            parts.push(
                `<line class="cover-edge" x1="${pa.x}" y1="${pa.y}" ` +
                    `x2="${pb.x}" y2="${pb.y}"/>`,
            );
        }
        for (const node of response.nodes) {
            const spot = position.get(node.id);
            if (!spot) continue;
            const fill = significanceColor(node.p_value.log10);
            const title = `${node.intent.join(" & ")} | extent ${node.extent_size} | p = ${node.p_value.decimal}`;
            parts.push(
                `<circle class="concept" data-id="${node.id}" cx="${spot.x}" ` +
                    `cy="${spot.y}" r="${spot.r}" fill="${fill}">` +
                    `<title>${escapeXml(title)}</title></circle>`,
            );
        }
        parts.push("</svg>");
        this.latticeContainer.innerHTML = parts.join("");

        const shown = response.nodes.length;
        this.latticeStatus.textContent =
            shown < response.total
                ? `${response.total} concepts match; showing the ${shown} strongest`
                : `${response.total} concepts match`;
    }

    private showNodeDetail(node: FindingNode): void {
        const detail = formatNodeDetail(node);
        this.nodeDetail.innerHTML = "";
        const title = document.createElement("h3");
        title.textContent = detail.title;
        this.nodeDetail.appendChild(title);
        for (const line of detail.lines) {
            const row = document.createElement("div");
            row.textContent = line;
            this.nodeDetail.appendChild(row);
        }
    }

    private async runSelection(): Promise<void> {
        if (!this.session) return;
        const features = this.selectedFeatures();
        if (features.length === 0) return;
        this.selectionError.textContent = "";
        try {
            const api = this.api();
            const selection = await api.testSelection(this.session.session_id, features);
            this.selectionResult.innerHTML = "";
            for (const line of formatSelectionDetail(selection)) {
                const row = document.createElement("div");
                row.textContent = line;
                this.selectionResult.appendChild(row);
            }
            const dist = await api.getDistribution(
                this.session.session_id,
                selection.test.v,
                120,
            );
            this.chartContainer.innerHTML = distributionChartSvg(dist, selection.observed);
        } catch (error) {
            this.showError(this.selectionError, error);
        }
    }

    private showError(target: HTMLElement, error: unknown): void {
        if (error instanceof ApiError) {
            target.textContent = formatApiError(error.status, error.body);
        } else {
            target.textContent = `Service unreachable: ${String(error)}`;
        }
    }
}

function escapeXml(text: string): string {
    return text
        .replace(/&/g, "&amp;")
        .replace(/</g, "&lt;")
        .replace(/>/g, "&gt;")
        .replace(/"/g, "&quot;");
}

document.addEventListener("DOMContentLoaded", () => {
    new CooccurApp();
});
