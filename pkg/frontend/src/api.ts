/** Thin typed client for the catalog service HTTP surface. */

import type {
  CatalogItem,
  EmotionAssignment,
  RecommendationResponse,
  RelationKind,
  StoryDocument,
  StoryPayload,
  WheelDocument,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function parseError(response: Response): Promise<ApiError> {
  let message = `${response.status} ${response.statusText}`;
  try {
    const body = (await response.json()) as { error?: string };
    if (body.error) message = body.error;
  } catch {
    // non-JSON error body; keep the status line
  }
  return new ApiError(response.status, message);
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  private async get<T>(path: string): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`);
    if (!response.ok) throw await parseError(response);
    return (await response.json()) as T;
  }

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!response.ok) throw await parseError(response);
    return (await response.json()) as T;
  }

  wheel(): Promise<WheelDocument> {
    return this.get("/emotions");
  }

  itemEmotions(itemId: string): Promise<{ id: string; emotions: EmotionAssignment[] }> {
    return this.get(`/items/${encodeURIComponent(itemId)}/emotions`);
  }

  submitItem(item: CatalogItem): Promise<{ id: string; emotions: EmotionAssignment[] }> {
    return this.post("/items", item);
  }

  submitStory(story: StoryPayload): Promise<{ id: string; emotions: Record<string, number> }> {
    return this.post("/stories", story);
  }

  story(storyId: string): Promise<StoryDocument> {
    return this.get(`/stories/${encodeURIComponent(storyId)}`);
  }

  storiesWithItem(itemId: string): Promise<{ stories: StoryDocument[] }> {
    return this.get(`/stories?item=${encodeURIComponent(itemId)}`);
  }

  recommendations(
    storyId: string,
    kind: RelationKind,
    limit = 5,
  ): Promise<RecommendationResponse> {
    return this.get(
      `/stories/${encodeURIComponent(storyId)}/recommendations?kind=${kind}&limit=${limit}`,
    );
  }
}

/** Load the static catalog listing (JSON array or JSON lines). */
export async function loadCatalog(
  url: string,
  fetchFn: typeof fetch = fetch,
): Promise<CatalogItem[]> {
  const response = await fetchFn(url);
  if (!response.ok) throw new ApiError(response.status, `cannot load catalog ${url}`);
  const text = await response.text();
  const trimmed = text.trim();
  if (trimmed.startsWith("[")) return JSON.parse(trimmed) as CatalogItem[];
  return trimmed
    .split("\n")
    .filter((line) => line.trim().length > 0)
    .map((line) => JSON.parse(line) as CatalogItem);
}
